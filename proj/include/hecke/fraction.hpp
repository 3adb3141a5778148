#pragma once

// Fractions num / prod_k {k}^{e_k} whose denominator is a product of
// q-brackets. Every denominator produced by the closed torus formulas has
// this shape, so sums only need a common multiple of bracket monomials and
// resolution only needs exact division by two-term binomials.

#include "hecke/laurent.hpp"

#include <map>
#include <string>
#include <utility>

namespace hecke {

/// Bracket monomial prod_k {k}^{e_k}, k >= 1, e_k >= 1.
using BracketPower = std::map<int, int>;

inline LaurentQA expand_brackets(const BracketPower& den) {
    LaurentQA out(1);
    for (const auto& [k, e] : den) out *= qbracket(k).pow(e);
    return out;
}

inline std::string brackets_to_string(const BracketPower& den) {
    if (den.empty()) return "1";
    std::string s;
    for (const auto& [k, e] : den) {
        s += "{" + std::to_string(k) + "}";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

class RingFraction {
public:
    RingFraction() = default;
    RingFraction(LaurentQA num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    RingFraction(long c) : num_(c) {}                       // NOLINT(google-explicit-constructor)
    RingFraction(LaurentQA num, BracketPower den) : num_(std::move(num)) {
        for (const auto& [k, e] : den) divide_by_bracket(k, e);
    }

    const LaurentQA& num() const noexcept { return num_; }
    const BracketPower& den_brackets() const noexcept { return den_; }
    LaurentQA den() const { return expand_brackets(den_); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }

    /// Divides by {k}^e; {-k} = -{k}.
    RingFraction& divide_by_bracket(int k, int e = 1) {
        if (k == 0) throw std::domain_error("division by {0} = 0");
        if (e < 0) throw std::invalid_argument("negative bracket exponent");
        if (k < 0) {
            k = -k;
            if (e % 2 == 1) num_ = -num_;
        }
        if (e > 0) den_[k] += e;
        return *this;
    }

    RingFraction divided_by_bracket(int k, int e = 1) const {
        RingFraction out(*this);
        out.divide_by_bracket(k, e);
        return out;
    }

    /// Divides by {mu} = prod {c mu_i}.
    RingFraction divided_by_partition_bracket(const Partition& mu, int c = 1) const {
        RingFraction out(*this);
        for (int part : mu) out.divide_by_bracket(c * part);
        return out;
    }

    RingFraction operator-() const {
        RingFraction out(*this);
        out.num_ = -out.num_;
        return out;
    }

    friend RingFraction operator+(const RingFraction& x, const RingFraction& y) { return combine(x, y, false); }
    friend RingFraction operator-(const RingFraction& x, const RingFraction& y) { return combine(x, y, true); }
    RingFraction& operator+=(const RingFraction& y) { return *this = combine(*this, y, false); }
    RingFraction& operator-=(const RingFraction& y) { return *this = combine(*this, y, true); }

    friend RingFraction operator*(const RingFraction& x, const RingFraction& y) {
        RingFraction out;
        out.num_ = x.num_ * y.num_;
        if (out.num_.is_zero()) return out;
        out.den_ = x.den_;
        for (const auto& [k, e] : y.den_) out.den_[k] += e;
        return out;
    }
    RingFraction& operator*=(const RingFraction& y) { return *this = *this * y; }

    friend RingFraction operator*(const RingFraction& x, const Rational& c) {
        RingFraction out(x);
        out.num_ = out.num_ * c;
        if (out.num_.is_zero()) out.den_.clear();
        return out;
    }
    friend RingFraction operator*(const Rational& c, const RingFraction& x) { return x * c; }

    /// Cancels bracket factors that divide the numerator exactly. Not a full
    /// gcd: {k} is only removed as a whole.
    RingFraction& reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return *this;
        }
        for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
            auto divisor = qbracket(it->first);
            while (it->second > 0) {
                auto r = divmod_q(num_, divisor);
                if (!r.exact()) break;
                num_ = std::move(r.quotient);
                --it->second;
            }
        }
        std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
        return *this;
    }

    RingFraction reduced() const {
        RingFraction out(*this);
        out.reduce();
        return out;
    }

    /// Exact quotient num / den. Throws NonExactDivision (with the remainder
    /// against the full denominator) when den does not divide num.
    LaurentQA resolve() const {
        LaurentQA current = num_;
        for (const auto& [k, e] : den_) {
            auto divisor = qbracket(k);
            for (int i = 0; i < e; ++i) {
                auto r = divmod_q(current, divisor);
                if (!r.exact()) return divide_exact_q(num_, den());  // throws with full remainder
                current = std::move(r.quotient);
            }
        }
        return current;
    }

    friend bool operator==(const RingFraction& x, const RingFraction& y) {
        auto common = lcm(x.den_, y.den_);
        return x.num_ * cofactor(common, x.den_) == y.num_ * cofactor(common, y.den_);
    }

    std::string to_string() const {
        if (den_.empty()) return num_.to_string();
        return "(" + num_.to_string() + ") / " + brackets_to_string(den_);
    }

private:
    static BracketPower lcm(const BracketPower& x, const BracketPower& y) {
        BracketPower out = x;
        for (const auto& [k, e] : y) out[k] = std::max(out[k], e);
        return out;
    }

    /// common / den as a polynomial; den must divide common bracket-wise.
    static LaurentQA cofactor(const BracketPower& common, const BracketPower& den) {
        LaurentQA out(1);
        for (const auto& [k, e] : common) {
            auto it = den.find(k);
            int missing = e - (it == den.end() ? 0 : it->second);
            if (missing > 0) out *= qbracket(k).pow(missing);
        }
        return out;
    }

    static RingFraction combine(const RingFraction& x, const RingFraction& y, bool subtract) {
        if (y.num_.is_zero()) return x;
        if (x.num_.is_zero()) return subtract ? -y : y;
        RingFraction out;
        out.den_ = lcm(x.den_, y.den_);
        auto xs = x.num_ * cofactor(out.den_, x.den_);
        auto ys = y.num_ * cofactor(out.den_, y.den_);
        out.num_ = subtract ? xs - ys : xs + ys;
        if (out.num_.is_zero()) out.den_.clear();
        return out;
    }

    LaurentQA num_;
    BracketPower den_;
};

/// Adams operator on fractions: {k} -> {dk} in the denominator.
inline RingFraction adams(const RingFraction& f, int d) {
    BracketPower den;
    for (const auto& [k, e] : f.den_brackets()) den[k * d] += e;
    return RingFraction(adams(f.num(), d), den);
}

}  // namespace hecke
