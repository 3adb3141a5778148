#pragma once

// Exact scalar types shared by every module. GMP-backed through
// Boost.Multiprecision so the headers stay header-only.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "n" or "n/d", always reduced.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        BigInt num(std::string(trim(text.substr(0, slash))));
        BigInt den(std::string(trim(text.substr(slash + 1))));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
}

inline long long gcd_ll(long long x, long long y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        long long t = x % y;
        x = y;
        y = t;
    }
    return x;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

/// Number-theoretic Moebius function.
inline int moebius(long long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int sign = 1;
    for (long long k = 2; k * k <= n; ++k) {
        if (n % k != 0) continue;
        n /= k;
        if (n % k == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

}  // namespace hecke
