#pragma once

// Closed formulas for torus knots T_d^m (the closure of the d-strand braid
// (s_1 ... s_{d-1})^m, framing dm) and framed unknots T_1^m.
//
// Power-sum decorations twist as
//   T_d^m * P_k = a^{km} sum_{|mu| = kd} P_mu / z_mu * {km mu} / {km},
// and a decoration P_mu is first cabled to P_{d mu}. In the plane a power sum
// evaluates to <P_mu> = {mu}_a / {mu}.

#include "hecke/combinatorics.hpp"
#include "hecke/errors.hpp"
#include "hecke/fraction.hpp"
#include "hecke/laurent.hpp"
#include "hecke/number.hpp"
#include "hecke/zbasis.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

class TorusKnot {
public:
    /// d >= 1 strands and m twists with gcd(d, m) = 1; d = 1 gives the unknot with framing m.
    TorusKnot(int d, int m) : d_(d), m_(m) {
        if (d < 1) throw std::invalid_argument("TorusKnot: d must be positive");
        if (std::gcd(d, std::abs(m)) != 1)
            throw std::invalid_argument("TorusKnot: gcd(" + std::to_string(d) + ", " + std::to_string(m) + ") != 1");
    }

    static TorusKnot framed_unknot(int framing) { return TorusKnot(1, framing); }

    int d() const noexcept { return d_; }
    int m() const noexcept { return m_; }
    int framing() const noexcept { return d_ * m_; }
    bool is_unknot() const noexcept { return d_ == 1 || std::abs(m_) == 1; }

    std::string to_string() const { return "T_" + std::to_string(d_) + "^" + std::to_string(m_); }

    bool operator==(const TorusKnot&) const = default;

private:
    int d_;
    int m_;
};

/// phi_{mu,nu}(x) = sum_lambda chi_lambda(mu) chi_lambda(nu) x^{kappa_lambda}, with x^k = q^{k * scale}.
inline LaurentQA phi(const Partition& mu, const Partition& nu, QExp scale = QExp(1)) {
    if (mu.weight() != nu.weight())
        throw WeightMismatch("phi: |" + mu.to_string() + "| != |" + nu.to_string() + "|");
    std::vector<Term> terms;
    for (const auto& lambda : partitions_of(mu.weight())) {
        long c = chi(lambda, mu) * chi(lambda, nu);
        if (c != 0) terms.push_back({{0, scale * kappa(lambda)}, Rational(c)});
    }
    return LaurentQA::from_terms(std::move(terms));
}

/// <P_mu> = {mu}_a / {mu}.
inline RingFraction plane_value(const Partition& mu) {
    RingFraction out(abracket_of_partition(mu));
    for (int part : mu) out.divide_by_bracket(part);
    return out;
}

/// W_lambda(U) = sum_mu chi_lambda(mu) / z_mu <P_mu>.
inline RingFraction unknot_W(const Partition& lambda) {
    if (lambda.weight() == 0) return RingFraction(1);
    RingFraction out;
    for (const auto& mu : partitions_of(lambda.weight())) {
        long c = chi(lambda, mu);
        if (c != 0) out += plane_value(mu) * (Rational(c) / Rational(z_mu(mu)));
    }
    return out.reduce();
}

/// Coefficients of T_d^m * P_k over P_mu, |mu| = kd.
inline std::vector<std::pair<Partition, RingFraction>> twist_power_sum(int k, int d, int m) {
    if (k < 1 || d < 1) throw std::invalid_argument("twist_power_sum: k and d must be positive");
    if (std::gcd(d, std::abs(m)) != 1) throw std::invalid_argument("twist_power_sum: gcd(d, m) != 1");
    std::vector<std::pair<Partition, RingFraction>> out;
    const int n = k * d;
    if (m == 0) {
        for (const auto& mu : partitions_of(n)) out.emplace_back(mu, RingFraction(mu.length() == 1 ? 1 : 0));
        return out;
    }
    const long km = static_cast<long>(k) * m;
    for (const auto& mu : partitions_of(n)) {
        LaurentQA num = bracket_of_partition(mu, km).shifted(0, static_cast<int>(km)) * (Rational(1) / Rational(z_mu(mu)));
        out.emplace_back(mu, RingFraction(std::move(num)).divided_by_bracket(static_cast<int>(km)).reduce());
    }
    return out;
}

namespace detail {

/// Depth-first walk over partitions of n carrying prod_i factor(mu_i).
inline void for_each_partition_product(int n, const std::function<LaurentQA(int)>& factor,
                                       const std::function<void(const Partition&, const LaurentQA&)>& visit) {
    std::vector<LaurentQA> cache(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) cache[static_cast<std::size_t>(k)] = factor(k);
    std::vector<int> parts;
    std::function<void(int, int, const LaurentQA&)> rec = [&](int remaining, int max_part, const LaurentQA& acc) {
        if (remaining == 0) {
            visit(Partition(parts), acc);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            parts.push_back(k);
            rec(remaining - k, k, acc * cache[static_cast<std::size_t>(k)]);
            parts.pop_back();
        }
    };
    rec(n, n, LaurentQA(1));
}

}  // namespace detail

/// Z-check_p(T_d^m) = {p} a^{pm} sum_{|mu| = pd} {mu}_a / z_mu * prod_i Q_{pm}(q^{mu_i}) / {pm}.
inline LaurentQA zcheck(const TorusKnot& T, int p) {
    if (p < 1) throw std::invalid_argument("zcheck: p must be positive");
    const int d = T.d(), m = T.m();
    if (m == 0) return abracket(p);
    const int pm = p * std::abs(m);
    const int sign = m < 0 ? -1 : 1;
    LaurentQA sum;
    detail::for_each_partition_product(
        p * d, [pm](int k) { return qnum_at_power(pm, k); },
        [&](const Partition& mu, const LaurentQA& qprod) {
            Rational c = Rational(1) / Rational(z_mu(mu));
            if (sign < 0 && (mu.length() - 1) % 2 == 1) c = -c;
            sum += qprod * abracket_of_partition(mu) * c;
        });
    LaurentQA num = (qbracket(p) * sum).shifted(0, p * m);
    return divide_exact_q(num, qbracket(pm));
}

/// Z_mu(T) = a^{|mu| m} sum_nu (1/z_nu) phi_{d mu, nu}(q^{m/d}) <P_nu>, |nu| = d|mu|.
inline RingFraction colored_p(const TorusKnot& T, const Partition& mu) {
    const int d = T.d(), m = T.m();
    if (mu.weight() == 0) return RingFraction(1);
    const Partition dmu = mu.scaled(d);
    const int n = dmu.weight();
    const QExp scale(m, d);
    RingFraction out;
    for (const auto& nu : partitions_of(n)) {
        LaurentQA ph = phi(dmu, nu, scale);
        if (ph.is_zero()) continue;
        if (!ph.has_integer_q_exponents())
            throw ResidualFractionalExponent("colored_p: fractional exponent survives in phi for " + T.to_string() +
                                             ", mu = " + mu.to_string());
        out += plane_value(nu) * RingFraction(ph * (Rational(1) / Rational(z_mu(nu))));
    }
    return (out * RingFraction(LaurentQA::a_pow(mu.weight() * m))).reduce();
}

/// {mu} Z_mu(T), resolved to a Laurent polynomial.
inline LaurentQA zcheck_general(const TorusKnot& T, const Partition& mu) {
    RingFraction f = colored_p(T, mu);
    return (f * RingFraction(bracket_of_partition(mu))).resolve();
}

/// H(T * Q_lambda) = sum_mu chi_lambda(mu) / z_mu Z_mu(T).
inline RingFraction colored_q(const TorusKnot& T, const Partition& lambda) {
    if (lambda.weight() == 0) return RingFraction(1);
    RingFraction out;
    for (const auto& mu : partitions_of(lambda.weight())) {
        long c = chi(lambda, mu);
        if (c != 0) out += colored_p(T, mu) * (Rational(c) / Rational(z_mu(mu)));
    }
    return out.reduce();
}

/// A(T; q) from the normalized HOMFLY-PT: [Z-check / (a - a^-1)] at a = 1.
inline ZAPoly alexander_torus(const TorusKnot& T) {
    return to_z2(substitute_a(divide_out_abracket(zcheck(T, 1))));
}

/// {1}{dm} / ({d}{m}); independent closed form.
inline LaurentQA alexander_closed_form(const TorusKnot& T) {
    if (T.m() == 0) return LaurentQA(1);
    RingFraction f(qbracket(1) * qbracket(T.d() * T.m()));
    f.divide_by_bracket(T.d()).divide_by_bracket(T.m());
    return f.resolve();
}

}  // namespace hecke
