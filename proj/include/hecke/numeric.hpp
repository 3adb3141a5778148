#pragma once

// Floating-point evaluation of exact polynomials. Used only as an oracle for
// divisibility verdicts (roots of [p]^2 on the unit circle), never to decide
// anything on its own.
//
// Fractional q-exponents use the principal branch q^{n/d} = exp((n/d) log q).

#include "hecke/fraction.hpp"
#include "hecke/laurent.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <map>
#include <type_traits>

namespace hecke {

/// 100-digit complex type for oracle checks on large coefficients.
using HighPrecisionComplex = boost::multiprecision::cpp_complex_100;

namespace detail {

template <class C>
using real_of = typename C::value_type;

template <class Real>
Real to_real(const Rational& r) {
    if constexpr (std::is_floating_point_v<Real>) {
        return r.template convert_to<Real>();
    } else {
        return Real(numerator_of(r).str()) / Real(denominator_of(r).str());
    }
}

template <class C>
C int_power(const C& base, long e) {
    if (e < 0) return C(1) / int_power(base, -e);
    C result(1), b(base);
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

template <class C>
class PowerCache {
public:
    explicit PowerCache(const C& base) : base_(base) {}

    const C& operator()(QExp e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        C v;
        if (e.is_integer()) {
            v = int_power(base_, e.num());
        } else {
            using Real = real_of<C>;
            using std::exp;
            using std::log;
            v = exp(log(base_) * C(Real(e.num()) / Real(e.den())));
        }
        return cache_.emplace(e, v).first->second;
    }

private:
    C base_;
    std::map<QExp, C> cache_;
};

}  // namespace detail

/// f(q0, a0).
template <class C = std::complex<double>>
C eval_numeric(const LaurentQA& f, const C& q0, const C& a0) {
    using Real = detail::real_of<C>;
    detail::PowerCache<C> qp(q0), ap(a0);
    C sum(0);
    for (const auto& t : f.terms()) sum += C(detail::to_real<Real>(t.coeff)) * qp(t.mono.q) * ap(QExp(t.mono.a));
    return sum;
}

/// (d/dq) f at (q0, a0).
template <class C = std::complex<double>>
C eval_numeric_dq(const LaurentQA& f, const C& q0, const C& a0) {
    using Real = detail::real_of<C>;
    detail::PowerCache<C> qp(q0), ap(a0);
    C sum(0);
    for (const auto& t : f.terms()) {
        if (t.mono.q == QExp(0)) continue;
        Real e = Real(t.mono.q.num()) / Real(t.mono.q.den());
        sum += C(detail::to_real<Real>(t.coeff) * e) * qp(t.mono.q + QExp(-1)) * ap(QExp(t.mono.a));
    }
    return sum;
}

template <class C = std::complex<double>>
C eval_numeric(const RingFraction& f, const C& q0, const C& a0) {
    return eval_numeric<C>(f.num(), q0, a0) / eval_numeric<C>(f.den(), q0, a0);
}

/// e^{i pi s / n} in the requested precision.
template <class C = std::complex<double>>
C root_of_unity(long s, long n) {
    using Real = detail::real_of<C>;
    using std::cos;
    using std::sin;
    Real theta;
    if constexpr (std::is_floating_point_v<Real>) {
        theta = Real(3.14159265358979323846264338327950288L) * Real(s) / Real(n);
    } else {
        theta = boost::math::constants::pi<Real>() * Real(s) / Real(n);
    }
    return C(cos(theta), sin(theta));
}

struct DoubleRootCheck {
    bool pass = true;
    double max_value = 0;
    double max_derivative = 0;
    int points = 0;
};

/// |f| and |df/dq| at q = e^{i pi s / p}, s != 0 mod p, with a drawn uniformly from the unit circle.
inline DoubleRootCheck numeric_double_root(const LaurentQA& f, int p, std::uint64_t seed, int samples = 2,
                                           double tolerance = 1e-8) {
    using C = HighPrecisionComplex;
    DoubleRootCheck out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> angle(0, 1L << 30);
    for (long s = 1; s < 2L * p; ++s) {
        if (s % p == 0) continue;
        const C q0 = root_of_unity<C>(s, p);
        for (int k = 0; k < samples; ++k) {
            const C a0 = root_of_unity<C>(angle(rng), 1L << 29);
            double v = abs(eval_numeric<C>(f, q0, a0)).convert_to<double>();
            double dv = abs(eval_numeric_dq<C>(f, q0, a0)).convert_to<double>();
            out.max_value = std::max(out.max_value, v);
            out.max_derivative = std::max(out.max_derivative, dv);
            ++out.points;
        }
    }
    out.pass = out.max_value < tolerance && out.max_derivative < tolerance;
    return out;
}

}  // namespace hecke
