#include "hecke/numeric.hpp"
#include "hecke/zbasis.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hecke;

namespace {

LaurentQA q(long e) { return LaurentQA::q_pow(e); }
LaurentQA a(int e) { return LaurentQA::a_pow(e); }

ZAPoly z2(std::map<int, ZAPoly::Coeffs> m) { return ZAPoly(std::move(m)); }

LaurentQA random_palindromic(std::mt19937_64& rng, int a_exp) {
    std::uniform_int_distribution<int> c(-6, 6), len(0, 5);
    LaurentQA f = LaurentQA(c(rng));
    int k_max = len(rng);
    for (int k = 1; k <= k_max; ++k) f += (q(2 * k) + q(-2 * k)) * Rational(c(rng));
    return f * a(a_exp);
}

ZAPoly random_z2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-5, 5), len(1, 5), ae(-3, 3);
    std::map<int, ZAPoly::Coeffs> m;
    for (int i = 0; i < 2; ++i) {
        ZAPoly::Coeffs cs;
        int n = len(rng);
        for (int k = 0; k < n; ++k) cs.push_back(Rational(c(rng)));
        m[ae(rng)] = cs;
    }
    return z2(m);
}

}  // namespace

TEST(ToZ2, Values) {
    EXPECT_EQ(to_z2(q(2) + LaurentQA(2) + q(-2)), z2({{0, {4, 1}}}));
    EXPECT_EQ(to_z2(q(2) + LaurentQA(2) + q(-2)), to_z2(qnum(2) * qnum(2)));
    EXPECT_EQ(to_z2(LaurentQA(1)), ZAPoly::constant(1));
    EXPECT_EQ(to_z2(qbracket(1) * qbracket(1)), z2({{0, {0, 1}}}));
    EXPECT_TRUE(to_z2(LaurentQA()).is_zero());
    EXPECT_EQ(to_z2(a(-2) * Rational(3)), z2({{-2, {3}}}));
}

TEST(ToZ2, Rejections) {
    try {
        to_z2(qbracket(1));
        FAIL();
    } catch (const NotInSubring& e) {
        EXPECT_EQ(e.reason(), NotInSubring::Reason::OddExponent);
    }
    try {
        to_z2((q(2) + LaurentQA(1)) * a(3));
        FAIL();
    } catch (const NotInSubring& e) {
        EXPECT_EQ(e.reason(), NotInSubring::Reason::NotPalindromic);
        EXPECT_EQ(e.a_exponent(), 3);
    }
    try {
        to_z2(LaurentQA::q_pow(QExp(2, 3)));
        FAIL();
    } catch (const NotInSubring& e) {
        EXPECT_EQ(e.reason(), NotInSubring::Reason::FractionalExponent);
    }
    EXPECT_FALSE(in_z2_ring(qbracket(2)));
    EXPECT_TRUE(in_z2_ring(qnum(3)));
    EXPECT_FALSE(in_z2_ring(qnum(2)));
}

TEST(ToZ2, PalindromicEvenCharacterization) {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> ae(-4, 4), pick(0, 2), shift(1, 4);
    for (int i = 0; i < 300; ++i) {
        LaurentQA f = random_palindromic(rng, ae(rng)) + random_palindromic(rng, ae(rng));
        switch (pick(rng)) {
            case 0: {
                auto z = to_z2(f);
                EXPECT_TRUE(z.is_integral());
                EXPECT_EQ(z.to_laurent(), f);
                break;
            }
            case 1: {
                LaurentQA g = f + q(2 * shift(rng)) * a(5);
                EXPECT_THROW(to_z2(g), NotInSubring);
                break;
            }
            default: {
                LaurentQA g = f + q(2 * shift(rng) - 1) * a(-5) + q(1 - 2 * shift(rng)) * a(-5);
                EXPECT_THROW(to_z2(g), NotInSubring);
                break;
            }
        }
    }
}

TEST(ToZ2, RoundTripFromZ2Side) {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 100; ++i) {
        auto z = random_z2(rng);
        EXPECT_EQ(to_z2(z.to_laurent()), z);
    }
    auto half = z2({{1, {Rational(1, 2), 3}}});
    EXPECT_FALSE(half.is_integral());
    EXPECT_EQ(to_z2(half.to_laurent()), half);
}

TEST(ZAPoly, Normalization) {
    auto z = z2({{0, {1, 2, 0, 0}}, {3, {0, 0}}});
    EXPECT_EQ(z, z2({{0, {1, 2}}}));
    EXPECT_EQ(z.z2_degree(), 1);
    EXPECT_EQ(z2({{0, {0, 0, 5}}, {2, {0, 1}}}).min_z2_degree(), 1);
    EXPECT_EQ(z + z2({{0, {-1, -2}}}), ZAPoly());
}

TEST(DivideByQnumSq, Values) {
    for (int p = 1; p <= 7; ++p) {
        auto d = divide_by_qnum_sq(to_z2(qnum(p) * qnum(p)), p);
        EXPECT_TRUE(d.exact);
        EXPECT_EQ(d.quotient, ZAPoly::constant(1));
    }
    auto d3 = divide_by_qnum_sq(to_z2(qbracket(3) * qbracket(3)), 3);
    EXPECT_TRUE(d3.exact);
    EXPECT_EQ(d3.quotient, z2({{0, {0, 1}}}));
    auto d2 = divide_by_qnum_sq(to_z2(q(2) + LaurentQA(1) + q(-2)), 2);
    EXPECT_FALSE(d2.exact);
    EXPECT_FALSE(d2.remainder.is_zero());
}

TEST(DivideByQnumSq, Reconstruction) {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 200; ++i) {
        auto f = random_z2(rng);
        for (int p : {2, 3, 4, 5}) {
            auto d = divide_by_qnum_sq(f, p);
            LaurentQA back = d.quotient.to_laurent() * qnum(p) * qnum(p) + d.remainder.to_laurent();
            EXPECT_EQ(back, f.to_laurent());
            EXPECT_EQ(d.exact, d.remainder.is_zero());
            for (const auto& [ae, cs] : d.remainder.slices()) EXPECT_LT(static_cast<int>(cs.size()), p);
        }
    }
}

TEST(Congruence, Values) {
    auto zero = congruence_verdict(LaurentQA(), 3);
    EXPECT_TRUE(zero.pass());
    ASSERT_TRUE(zero.quotient);
    EXPECT_TRUE(zero.quotient->is_zero());

    for (int p : {2, 3, 5}) {
        auto ok = congruence_verdict(qnum(p) * qnum(p) * (a(1) + a(-1)), p);
        EXPECT_TRUE(ok.pass());
        ASSERT_TRUE(ok.quotient);
        EXPECT_EQ(*ok.quotient, z2({{1, {1}}, {-1, {1}}}));

        auto half = congruence_verdict(qnum(p) * qnum(p) * Rational(1, 2), p);
        EXPECT_FALSE(half.pass());
        EXPECT_FALSE(half.integral);
        EXPECT_TRUE(half.z2_member);
    }

    auto odd = congruence_verdict(qbracket(1), 2);
    EXPECT_FALSE(odd.z2_member);
    EXPECT_FALSE(odd.pass());
    EXPECT_FALSE(odd.detail.empty());

    auto single = congruence_verdict(qnum(3) * qnum(3) * qnum(3) + q(2) + LaurentQA(-1) + q(-2), 3);
    EXPECT_TRUE(single.z2_member);
    EXPECT_FALSE(single.divisible);
    ASSERT_TRUE(single.remainder_witness);
    EXPECT_FALSE(single.remainder_witness->is_zero());
}

TEST(Congruence, NumericOracleAgreesOnPass) {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 20; ++i) {
        auto h = random_z2(rng).to_laurent();
        for (int p : {2, 3, 5}) {
            LaurentQA f = h * qnum(p) * qnum(p);
            ASSERT_TRUE(congruence_verdict(f, p).pass());
            auto check = numeric_double_root(f, p, 1000 + static_cast<std::uint64_t>(i));
            EXPECT_TRUE(check.pass) << check.max_value << " " << check.max_derivative;
        }
    }
}
