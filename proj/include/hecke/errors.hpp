#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// A q-only division left a nonzero remainder.
class NonExactDivision : public std::runtime_error {
public:
    NonExactDivision(int a_exponent, std::string remainder)
        : std::runtime_error("non-exact division at a^" + std::to_string(a_exponent) + ", remainder " + remainder),
          a_exponent_(a_exponent),
          remainder_(std::move(remainder)) {}

    int a_exponent() const noexcept { return a_exponent_; }
    const std::string& remainder() const noexcept { return remainder_; }

private:
    int a_exponent_;
    std::string remainder_;
};

/// Division by (a - a^-1) left a nonzero remainder.
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(std::string remainder)
        : std::runtime_error("not divisible by (a - a^-1), remainder " + remainder), remainder_(std::move(remainder)) {}

    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

/// Element is outside Q[z^2, a^+-1].
class NotInSubring : public std::runtime_error {
public:
    enum class Reason { OddExponent, NotPalindromic, FractionalExponent };

    NotInSubring(Reason reason, int a_exponent)
        : std::runtime_error(describe(reason, a_exponent)), reason_(reason), a_exponent_(a_exponent) {}

    Reason reason() const noexcept { return reason_; }
    int a_exponent() const noexcept { return a_exponent_; }

    static const char* name(Reason r) {
        switch (r) {
            case Reason::OddExponent: return "odd q-exponent";
            case Reason::NotPalindromic: return "not palindromic in q";
            case Reason::FractionalExponent: return "fractional q-exponent";
        }
        return "?";
    }

private:
    static std::string describe(Reason r, int a_exponent) {
        return std::string("not in Q[z^2, a^+-1]: ") + name(r) + " at a^" + std::to_string(a_exponent);
    }

    Reason reason_;
    int a_exponent_;
};

class WeightMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sum that must have integral q-exponents did not.
class ResidualFractionalExponent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hecke
