#include <gtest/gtest.h>

#include <random>

#include "selmer/curve.hpp"
#include "selmer/errors.hpp"

using namespace selmer;

TEST(Family, Membership) {
  EXPECT_TRUE(epsilon_member(Int(1), Int(1)));
  EXPECT_FALSE(epsilon_member(Int(0), Int(64)));
  EXPECT_TRUE(epsilon_member(Int(-3), Int(1)));
  EXPECT_EQ((CurveModel{-3, 1}).discriminant(), -81);
  EXPECT_FALSE(epsilon_member(Int(-3), Int(2)));  // singular
  EXPECT_FALSE(epsilon_member(Int(16), Int(64)));  // gcd(4096, 4096) = 2^12
  EXPECT_TRUE(epsilon_member(Int(0), Int(32)));
}

TEST(Family, InvariantsAndHeights) {
  EXPECT_EQ(ij_of_curve(Int(1), Int(1)), (InvariantPair{-3, -27}));
  EXPECT_EQ(ij_of_curve(Int(0), Int(1)), (InvariantPair{0, -27}));
  EXPECT_EQ(ij_of_curve(Int(-3), Int(1)), (InvariantPair{9, -27}));
  EXPECT_EQ(naive_height(Int(1), Int(1)), 27);
  EXPECT_EQ(bs_height(Int(1), Int(1)), make_rat(729, 4));
  EXPECT_EQ(naive_height(Int(0), Int(1)), 27);
  EXPECT_EQ(naive_height(Int(-2), Int(0)), 32);
}

TEST(MinimalModel, Examples) {
  for (long p : {5, 7, 11}) {
    Int P(p);
    EXPECT_EQ(minimalize_at_p(pow(P, 4), pow(P, 6), P), (CurveModel{1, 1}));
    EXPECT_EQ(minimalize_at_p(pow(P, 8), pow(P, 12), P), (CurveModel{1, 1}));
    EXPECT_EQ(minimalize_at_p(Int(1), Int(1), P), (CurveModel{1, 1}));
    CurveModel m = minimalize_at_p(pow(P, 9), pow(P, 13), P);
    EXPECT_TRUE(is_minimal_at_p(m.A, m.B, P));
  }
  EXPECT_THROW(minimalize_at_p(Int(-3), Int(2), Int(5)), ArgumentError);
}

TEST(Tate, TableRows) {
  Int p(5);
  EXPECT_EQ(kodaira_type(Int(1), Int(1), p), (LocalReductionData{Kodaira::I0, 0, Subtype::None, 1}));
  EXPECT_EQ(kodaira_type(Int(5), Int(5), p).kodaira, Kodaira::II);
  EXPECT_EQ(kodaira_type(Int(0), Int(5), p).tamagawa, 1);
  auto iii = kodaira_type(Int(5), Int(25), p);
  EXPECT_EQ(iii.kodaira, Kodaira::III);
  EXPECT_EQ(iii.tamagawa, 2);
  EXPECT_EQ(kodaira_type(Int(0), Int(125), p).kodaira, Kodaira::I0star);
  EXPECT_EQ(kodaira_type(Int(625 * 2), Int(5 * 5 * 5 * 5 * 5), p).kodaira, Kodaira::IIstar);
  EXPECT_THROW(kodaira_type(Int(1), Int(1), Int(3)), UnsupportedPrimeError);
  EXPECT_THROW(kodaira_type(Int(625), Int(15625), p), ArgumentError);
}

// y^2 = x^3 - 3x + 2 + 5^n-ish perturbations give multiplicative reduction;
// (A, B) = (-3, 2) is singular, so use (-3, 2 + p^k).
TEST(Tate, MultiplicativeReduction) {
  for (long p : {5, 7, 11}) {
    Int P(p);
    for (int k = 1; k <= 4; ++k) {
      Int A = -3, B = 2 + pow(P, k);
      LocalReductionData r = kodaira_type(A, B, P);
      ASSERT_EQ(r.kodaira, Kodaira::In) << p << " " << k;
      EXPECT_EQ(r.n, valuation(CurveModel{A, B}.discriminant(), P).value());
      if (r.subtype == Subtype::Split) EXPECT_EQ(r.tamagawa, r.n);
      if (r.subtype == Subtype::Nonsplit) EXPECT_EQ(r.tamagawa, r.n % 2 == 0 ? 2 : 1);
    }
  }
}

TEST(Tate, GoodOrI1) {
  EXPECT_TRUE(good_or_I1(Int(1), Int(1), Int(5)));
  for (long p : {5, 7, 11}) EXPECT_FALSE(good_or_I1(Int(0), Int(p), Int(p)));
  EXPECT_TRUE(good_or_I1(Int(1), Int(0), Int(7)));
}

TEST(Tate, TwistByUnitSquareIsCoherent) {
  std::mt19937_64 rng(59);
  for (long p : {5, 7, 11}) {
    Int P(p), mod6 = pow(P, 6);
    std::uniform_int_distribution<long> coeff(0, mod6.get_si() - 1), unit(1, p - 1);
    int tested = 0;
    while (tested < 300) {
      Int A = coeff(rng), B = coeff(rng);
      if (CurveModel{A, B}.discriminant() == 0 || !is_minimal_at_p(A, B, P)) continue;
      Int u = unit(rng) + p * coeff(rng);
      Int t = u * u;
      Int A2 = t * t * A, B2 = t * t * t * B;
      EXPECT_EQ(kodaira_type(A, B, P), kodaira_type(A2, B2, P));
      ++tested;
    }
  }
}

TEST(Tate, CubicRootCount) {
  EXPECT_EQ(count_cubic_roots_mod_p(Int(-1), Int(0), Int(7)), 3);
  EXPECT_EQ(count_cubic_roots_mod_p(Int(1), Int(1), Int(5)), 0);
  // Past 10^4 the gcd method is used; T^3 - T still has three roots.
  EXPECT_EQ(count_cubic_roots_mod_p(Int(-1), Int(0), Int(10007)), 3);
}
