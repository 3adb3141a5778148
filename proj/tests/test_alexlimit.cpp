#include "golden.hpp"
#include "hecke/alexlimit.hpp"
#include "hecke/report.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {

LaurentQA q(long e) { return LaurentQA::q_pow(e); }
LaurentQA a(int e) { return LaurentQA::a_pow(e); }

const LaurentQA z2 = qbracket(1) * qbracket(1);

}  // namespace

TEST(LimitRatio, Values) {
    EXPECT_EQ(limit_ratio(abracket(1) * q(1)).value, q(1));
    for (int p = 1; p <= 6; ++p) EXPECT_EQ(limit_ratio(abracket(p)).value, LaurentQA(p));
    EXPECT_EQ(limit_ratio(zcheck(TorusKnot(2, 3), 1), "alexander").value, z2 + LaurentQA(1));
    EXPECT_EQ(limit_ratio(zcheck(TorusKnot(2, 3), 1), "alexander").provenance, "alexander");
    EXPECT_THROW(limit_ratio(a(2)), NotDivisible);
}

TEST(Alpha, Values) {
    EXPECT_EQ(alpha(2, 1), ZAPoly::constant(1));
    EXPECT_EQ(alpha(3, 1), ZAPoly({{0, {0, 1}}}));
    for (int p = 1; p <= 7; ++p) EXPECT_TRUE(alpha(p, 0).is_zero()) << p;
    const LaurentQA r = q(4) + LaurentQA(1) + q(-4);
    EXPECT_EQ(alpha(2, 6).to_laurent(), z2 * r * r);
}

TEST(Alpha, IntegralForPrimes) {
    for (int p : {2, 3, 5, 7})
        for (long tau = -3; tau <= 3; ++tau) {
            const ZAPoly al = alpha(p, tau);
            EXPECT_TRUE(al.is_integral()) << p << " " << tau;
            EXPECT_EQ(alpha(p, -tau), al);
            LaurentQA hooks;
            for (const auto& h : hooks_of(p)) hooks += q(static_cast<long>(h.arm - h.leg) * p * tau);
            EXPECT_EQ(qnum(p) * qnum(p) * al.to_laurent(), hooks - LaurentQA(p * hecke_sign(p, tau)));
        }
}

TEST(Alpha, CompositeOddFramingIsNotDivisible) {
    for (int p : {4, 6})
        for (long tau : {-3L, -1L, 1L, 3L}) EXPECT_THROW(alpha(p, tau), NonExactDivision) << p << " " << tau;
    for (int p : {4, 6})
        for (long tau : {-2L, 2L}) EXPECT_NO_THROW(alpha(p, tau));
}

TEST(LimitIdentity, Values) {
    auto t = limit_identity_check(TorusKnot(2, 3), 2);
    EXPECT_TRUE(t.equal);
    EXPECT_EQ(t.lhs, golden::laurent("limit_g T2_3 2"));
    const LaurentQA a_q2 = q(4) - LaurentQA(1) + q(-4);
    EXPECT_EQ(t.rhs, qnum(2) * qnum(2) * a_q2 * alpha(2, 6).to_laurent());

    auto u = limit_identity_check(TorusKnot(1, 1), 3);
    EXPECT_TRUE(u.equal);
    EXPECT_EQ(u.lhs, qnum(3) * qnum(3) * z2);

    auto one = limit_identity_check(TorusKnot(3, 2), 1);
    EXPECT_TRUE(one.equal);
    EXPECT_TRUE(one.lhs.is_zero());
}

TEST(LimitIdentity, ImpliesLimitVerdict) {
    for (const auto& c : SweepConfig().cases()) {
        if (c.p * c.d > 9) continue;
        const TorusKnot T(c.d, c.m);
        const bool identity = limit_identity_check(T, c.p).equal;
        EXPECT_TRUE(identity) << T.to_string() << " p=" << c.p;
        if (identity) {
            EXPECT_TRUE(theorem13_verdict(T, c.p)) << T.to_string() << " p=" << c.p;
        }
    }
    EXPECT_TRUE(theorem13_verdict(TorusKnot(2, 3), 1));
}

TEST(LimitIdentity, TwoPathAgreement) {
    for (const auto& c : SweepConfig().cases()) {
        if (c.p * c.d > 9) continue;
        const TorusKnot T(c.d, c.m);
        const LaurentQA direct = limit_ratio(g_p(T, c.p)).value;
        const LaurentQA psi = adams(alexander_torus(T).to_laurent(), c.p) * Rational(c.p * hecke_sign(c.p, T.framing()));
        EXPECT_EQ(direct, limit_ratio(zcheck(T, c.p)).value - psi) << T.to_string() << " p=" << c.p;
    }
}

TEST(LimitValue, AlexanderSymmetry) {
    for (int d = 1; d <= 3; ++d)
        for (int m = -5; m <= 5; ++m) {
            if (m == 0 || std::gcd(d, std::abs(m)) != 1) continue;
            const LaurentQA f = limit_ratio(zcheck(TorusKnot(d, m), 1), "alexander").value;
            EXPECT_EQ(f, invert_variables(f));
            EXPECT_EQ(f, negate_q(f));
            EXPECT_TRUE(in_z2_ring(f));
        }
}

TEST(LimitIdentity, CompositeDependsOnFramingParity) {
    for (int p : {4, 6}) {
        for (const auto& T : {TorusKnot(2, 3), TorusKnot(1, 2), TorusKnot(3, 2)}) {
            EXPECT_TRUE(limit_identity_check(T, p).equal) << T.to_string() << " p=" << p;
            EXPECT_TRUE(theorem13_verdict(T, p)) << T.to_string() << " p=" << p;
        }
        EXPECT_THROW(limit_identity_check(TorusKnot(1, 1), p), NonExactDivision);
        EXPECT_FALSE(theorem13_verdict(TorusKnot(1, 1), p));
        EXPECT_FALSE(theorem13_verdict(TorusKnot(1, 3), p));
    }
}

TEST(HookAlexander, TrefoilHooks) {
    const TorusKnot T(2, 3);
    auto one = verify_thm41_hooks(T, HookShape{0, 0});
    EXPECT_TRUE(one.pass);
    EXPECT_EQ(one.a_lambda, z2 + LaurentQA(1));
    auto three = verify_thm41_hooks(T, HookShape{1, 1});
    EXPECT_TRUE(three.pass);
    EXPECT_EQ(three.a_lambda, q(6) - LaurentQA(1) + q(-6));
    EXPECT_EQ(three.expected, q(6) - LaurentQA(1) + q(-6));
}

TEST(HookAlexander, UnknotAndSmallKnots) {
    auto u = verify_thm41_hooks(TorusKnot(1, 1), HookShape{1, 0});
    EXPECT_TRUE(u.pass);
    EXPECT_EQ(u.a_lambda, LaurentQA(1));
    for (const auto& T : {TorusKnot(2, 3), TorusKnot(3, 2), TorusKnot(1, 2), TorusKnot(1, -1)})
        for (int w = 1; w <= 3; ++w)
            for (const auto& h : hooks_of(w)) EXPECT_TRUE(verify_thm41_hooks(T, h).pass) << T.to_string() << " " << w;
}
