#pragma once

// a -> 1 limits of HOMFLY-PT type invariants and the colored Alexander
// polynomial of hook colors.
//
// lim_{a->1} g_p / (a - a^-1) = [p]^2 A(K; q^p) alpha_p^tau(z), where
//   [p]^2 alpha_p^tau = sum_{hooks (m|n) of p} q^{(m-n) p tau} - p (-1)^{(p-1) tau}.

#include "hecke/combinatorics.hpp"
#include "hecke/errors.hpp"
#include "hecke/fraction.hpp"
#include "hecke/hecke.hpp"
#include "hecke/laurent.hpp"
#include "hecke/torus.hpp"
#include "hecke/zbasis.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct LimitValue {
    LaurentQA value;  // q only
    std::string provenance;
};

/// [f / (a - a^-1)] at a = 1.
inline LimitValue limit_ratio(const LaurentQA& f, std::string provenance = {}) {
    return {substitute_a(divide_out_abracket(f)), std::move(provenance)};
}

/// alpha_p^tau by exact division; NonExactDivision if [p]^2 does not divide.
inline ZAPoly alpha(int p, long tau) {
    if (p < 1) throw std::invalid_argument("alpha: p must be positive");
    LaurentQA s;
    for (const auto& h : hooks_of(p)) s += LaurentQA::q_pow(static_cast<long>(h.arm - h.leg) * p * tau);
    s -= LaurentQA(static_cast<long>(p) * hecke_sign(p, tau));
    return to_z2(divide_exact_q(s, qnum(p) * qnum(p)));
}

struct LimitIdentity {
    bool equal = false;
    LaurentQA lhs;
    LaurentQA rhs;
};

/// lim g_p / (a - a^-1) against [p]^2 A(T; q^p) alpha_p^{dm}.
inline LimitIdentity limit_identity_check(const TorusKnot& T, int p) {
    LimitIdentity out;
    out.lhs = limit_ratio(g_p(T, p), "g_p").value;
    out.rhs = qnum(p) * qnum(p) * adams(alexander_torus(T).to_laurent(), p) * alpha(p, T.framing()).to_laurent();
    out.equal = out.lhs == out.rhs;
    return out;
}

/// lim g_p / (a - a^-1) in [p]^2 Z[z^2].
inline bool theorem13_verdict(const TorusKnot& T, int p) {
    return congruence_verdict(limit_ratio(g_p(T, p), "g_p").value, p).pass();
}

struct HookAlexander {
    bool pass = false;
    LaurentQA a_lambda;  // A_lambda(T; q)
    LaurentQA expected;  // A(T; q^{|lambda|})
};

namespace detail {

/// Numerator of f / (a - a^-1) at a = 1, over the unchanged q-denominator.
inline std::pair<LaurentQA, LaurentQA> limit_fraction(const RingFraction& f) {
    return {substitute_a(divide_out_abracket(f.num())), f.den()};
}

}  // namespace detail

/// A_lambda(T; q) = q^{-kappa tau} lim H(T * Q_lambda) / W_lambda(U) compared with A(T; q^{|lambda|}).
inline HookAlexander verify_thm41_hooks(const TorusKnot& T, const HookShape& hook) {
    const Partition lambda = hook.to_partition();
    const long tau = T.framing();
    auto [hn, hd] = detail::limit_fraction(colored_q(T, lambda));
    auto [wn, wd] = detail::limit_fraction(unknot_W(lambda));
    HookAlexander out;
    out.a_lambda = divide_exact_q((hn * wd).shifted(QExp(-kappa(lambda) * tau), 0), hd * wn);
    out.expected = adams(alexander_torus(T).to_laurent(), lambda.weight());
    out.pass = out.a_lambda == out.expected;
    return out;
}

}  // namespace hecke
