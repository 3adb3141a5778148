#pragma once

// Degree-truncated framed LMOV integrality.
//
//   Z_CS = 1 + sum_mu (-1)^{tau |mu|} Z_mu(K) / z_mu p_mu,   F = log Z_CS,
//   F = sum_d (1/d) sum_lambda f_lambda(q^d, a^d) s_lambda(x^d),
//   f-hat_mu = sum_lambda f_lambda (M^-1)_{lambda mu},
// and the prediction is z^2 f-hat_mu in Z[z^2, a^+-1].

#include "hecke/combinatorics.hpp"
#include "hecke/errors.hpp"
#include "hecke/fraction.hpp"
#include "hecke/laurent.hpp"
#include "hecke/number.hpp"
#include "hecke/torus.hpp"
#include "hecke/zbasis.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// Power series in p_mu truncated above weight D.
class PSeries {
public:
    explicit PSeries(int degree, RingFraction constant = RingFraction(0)) : degree_(degree), constant_(std::move(constant)) {
        if (degree < 0) throw std::invalid_argument("PSeries: negative degree");
    }

    int degree() const noexcept { return degree_; }
    const RingFraction& constant() const noexcept { return constant_; }
    const std::map<Partition, RingFraction>& coeffs() const noexcept { return coeffs_; }

    RingFraction coeff(const Partition& mu) const {
        if (mu.weight() == 0) return constant_;
        auto it = coeffs_.find(mu);
        return it == coeffs_.end() ? RingFraction(0) : it->second;
    }

    void set(const Partition& mu, RingFraction c) {
        if (mu.weight() == 0) {
            constant_ = std::move(c);
            return;
        }
        if (mu.weight() > degree_) return;
        c.reduce();
        if (c.is_zero())
            coeffs_.erase(mu);
        else
            coeffs_[mu] = std::move(c);
    }

    void add(const Partition& mu, const RingFraction& c) { set(mu, coeff(mu) + c); }

    friend PSeries operator+(const PSeries& x, const PSeries& y) {
        PSeries out(std::min(x.degree_, y.degree_), x.constant_ + y.constant_);
        for (const auto& [mu, c] : x.coeffs_) out.add(mu, c);
        for (const auto& [mu, c] : y.coeffs_) out.add(mu, c);
        return out;
    }

    friend PSeries operator*(const PSeries& x, const PSeries& y) {
        PSeries out(std::min(x.degree_, y.degree_), x.constant_ * y.constant_);
        if (!y.constant_.is_zero())
            for (const auto& [mu, c] : x.coeffs_) out.add(mu, c * y.constant_);
        if (!x.constant_.is_zero())
            for (const auto& [mu, c] : y.coeffs_) out.add(mu, x.constant_ * c);
        for (const auto& [mu, a] : x.coeffs_)
            for (const auto& [nu, b] : y.coeffs_)
                if (mu.weight() + nu.weight() <= out.degree_) out.add(mu.joined(nu), a * b);
        return out;
    }

    friend PSeries operator*(const PSeries& x, const Rational& c) {
        PSeries out(x.degree_, x.constant_ * c);
        for (const auto& [mu, v] : x.coeffs_) out.set(mu, v * c);
        return out;
    }

    bool operator==(const PSeries& o) const {
        if (!(constant_ == o.constant_)) return false;
        std::map<Partition, bool> keys;
        for (const auto& [mu, c] : coeffs_) keys[mu] = true;
        for (const auto& [mu, c] : o.coeffs_) keys[mu] = true;
        for (const auto& [mu, unused] : keys)
            if (!(coeff(mu) == o.coeff(mu))) return false;
        return true;
    }

private:
    int degree_;
    RingFraction constant_;
    std::map<Partition, RingFraction> coeffs_;
};

/// Truncated log; the constant term must be 1.
inline PSeries series_log(const PSeries& z) {
    if (!(z.constant() == RingFraction(1))) throw PreconditionViolated("series_log: constant term is not 1");
    PSeries x = z;
    x.set(Partition(), RingFraction(0));
    PSeries out(z.degree());
    PSeries power = x;
    for (int k = 1; k <= z.degree(); ++k) {
        out = out + power * Rational(k % 2 == 1 ? 1 : -1, k);
        power = power * x;
    }
    return out;
}

/// Truncated exp; the constant term must be 0.
inline PSeries series_exp(const PSeries& f) {
    if (!f.constant().is_zero()) throw PreconditionViolated("series_exp: constant term is not 0");
    PSeries out(f.degree(), RingFraction(1));
    PSeries power(f.degree(), RingFraction(1));
    Rational factorial(1);
    for (int k = 1; k <= f.degree(); ++k) {
        power = power * f;
        factorial *= k;
        out = out + power * (Rational(1) / factorial);
    }
    return out;
}

/// Z_CS truncated at weight D.
inline PSeries partition_function(const TorusKnot& K, int D) {
    PSeries z(D, RingFraction(1));
    const long tau = K.framing();
    for (int n = 1; n <= D; ++n)
        for (const auto& mu : partitions_of(n)) {
            Rational c = Rational(1) / Rational(z_mu(mu));
            if ((tau * n) % 2 != 0) c = -c;
            z.set(mu, colored_p(K, mu) * c);
        }
    return z;
}

inline PSeries free_energy(const PSeries& z) { return series_log(z); }

namespace detail {

inline std::vector<int> divisors_of_gcd(const Partition& mu) {
    int g = 0;
    for (int part : mu) g = std::gcd(g, part);
    std::vector<int> out;
    for (int e = 1; e <= g; ++e)
        if (g % e == 0) out.push_back(e);
    return out;
}

inline Partition divided(const Partition& mu, int e) {
    std::vector<int> parts;
    for (int part : mu) parts.push_back(part / e);
    return Partition(std::move(parts));
}

}  // namespace detail

using FMap = std::map<Partition, RingFraction>;

/// f_lambda for 1 <= |lambda| <= D.
inline FMap extract_f(const PSeries& F, int D) {
    FMap h;
    for (int n = 1; n <= D; ++n)
        for (const auto& mu : partitions_of(n)) {
            RingFraction s;
            for (int e : detail::divisors_of_gcd(mu)) {
                int mob = moebius(e);
                if (mob == 0) continue;
                s += adams(F.coeff(detail::divided(mu, e)), e) * Rational(mob, e);
            }
            h[mu] = s.reduce();
        }
    FMap f;
    for (int n = 1; n <= D; ++n)
        for (const auto& lambda : partitions_of(n)) {
            RingFraction s;
            for (const auto& nu : partitions_of(n)) {
                long c = chi(lambda, nu);
                if (c != 0) s += h[nu] * Rational(c);
            }
            f[lambda] = s.reduce();
        }
    return f;
}

/// Inverse of extract_f.
inline PSeries reassemble(const FMap& f, int D) {
    FMap g;
    for (int n = 1; n <= D; ++n)
        for (const auto& nu : partitions_of(n)) {
            RingFraction s;
            for (const auto& lambda : partitions_of(n)) {
                auto it = f.find(lambda);
                long c = chi(lambda, nu);
                if (c != 0 && it != f.end()) s += it->second * Rational(c);
            }
            g[nu] = (s * (Rational(1) / Rational(z_mu(nu)))).reduce();
        }
    PSeries F(D);
    for (int n = 1; n <= D; ++n)
        for (const auto& mu : partitions_of(n)) {
            RingFraction s;
            for (int e : detail::divisors_of_gcd(mu)) s += adams(g[detail::divided(mu, e)], e) * Rational(1, e);
            F.set(mu, s);
        }
    return F;
}

/// M_{lambda mu} = sum_nu chi_lambda(nu) chi_mu(nu) / z_nu {nu}.
inline RingFraction m_matrix(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw WeightMismatch("m_matrix: weights differ");
    RingFraction s;
    for (const auto& nu : partitions_of(lambda.weight())) {
        long c = chi(lambda, nu) * chi(mu, nu);
        if (c != 0) s += RingFraction(bracket_of_partition(nu) * (Rational(c) / Rational(z_mu(nu))));
    }
    return s;
}

/// (M^-1)_{lambda mu} = sum_nu chi_lambda(nu) chi_mu(nu) / (z_nu {nu}).
inline RingFraction m_inverse(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw WeightMismatch("m_inverse: weights differ");
    RingFraction s;
    for (const auto& nu : partitions_of(lambda.weight())) {
        long c = chi(lambda, nu) * chi(mu, nu);
        if (c != 0) s += RingFraction(LaurentQA(Rational(c) / Rational(z_mu(nu)))).divided_by_partition_bracket(nu);
    }
    return s.reduce();
}

struct LmovVerdict {
    Partition mu;
    bool pass = false;
    std::optional<ZAPoly> z2_fhat;
    int min_z2_degree = -1;  // lowest z^2-power present in z^2 f-hat
    std::string detail;
};

/// f-hat_mu from extracted f.
inline RingFraction f_hat(const FMap& f, const Partition& mu) {
    RingFraction s;
    for (const auto& lambda : partitions_of(mu.weight())) {
        auto it = f.find(lambda);
        if (it == f.end() || it->second.is_zero()) continue;
        s += it->second * m_inverse(lambda, mu);
    }
    return s.reduce();
}

inline LmovVerdict lmov_verdict_from(const FMap& f, const Partition& mu) {
    LmovVerdict out;
    out.mu = mu;
    RingFraction z2f = f_hat(f, mu) * RingFraction(qbracket(1) * qbracket(1));
    LaurentQA value;
    try {
        value = z2f.reduce().resolve();
    } catch (const NonExactDivision& e) {
        out.detail = std::string("z^2 f-hat is not a Laurent polynomial: ") + e.what();
        return out;
    }
    try {
        out.z2_fhat = to_z2(value);
    } catch (const NotInSubring& e) {
        out.detail = e.what();
        return out;
    }
    out.min_z2_degree = out.z2_fhat->min_z2_degree();
    out.pass = out.z2_fhat->is_integral();
    if (!out.pass) out.detail = "coefficients are not integral";
    return out;
}

/// f_lambda of K up to weight D.
inline FMap lmov_f(const TorusKnot& K, int D) { return extract_f(free_energy(partition_function(K, D)), D); }

inline LmovVerdict lmov_verdict(const TorusKnot& K, const Partition& mu, int D) {
    if (mu.weight() < 1 || mu.weight() > D) throw PreconditionViolated("lmov_verdict: need 1 <= |mu| <= D");
    return lmov_verdict_from(lmov_f(K, D), mu);
}

/// Verdicts for every mu with 1 <= |mu| <= D, sharing one extraction.
inline std::vector<LmovVerdict> lmov_verdicts(const TorusKnot& K, int D) {
    const FMap f = lmov_f(K, D);
    std::vector<LmovVerdict> out;
    for (int n = 1; n <= D; ++n)
        for (const auto& mu : partitions_of(n)) out.push_back(lmov_verdict_from(f, mu));
    return out;
}

}  // namespace hecke
