#include <gtest/gtest.h>

#include "selmer/densities.hpp"
#include "selmer/errors.hpp"
#include "selmer/factor.hpp"

using namespace selmer;

namespace {

Rat P(long p) { return Rat(p); }

// Local factors transcribed independently from the closed forms.
Rat ramified(long pl) {
  Rat p = P(pl);
  Rat p10 = pow(p, 10);
  return (p - 1) * (p * p * p * p - p * p * p + p * p - p + 1) *
         (46 * pow(p, 5) + 62 * pow(p, 4) + 79 * pow(p, 3) + 84 * p * p + 84 * p + 48) / (48 * (p10 - 1));
}
Rat unramified(long pl) {
  Rat p = P(pl);
  Rat num = 16 * pow(p, 11) + 16 * pow(p, 10) - 8 * pow(p, 9) + 8 * pow(p, 8) - 8 * pow(p, 7) - 10 * pow(p, 6) -
            4 * pow(p, 5) + 7 * pow(p, 4) - pow(p, 3) - 8 * p * p - 24 * p - 1;
  return num / (16 * (pow(p, 10) - 1) * (p + 1));
}
Rat biquadratic(long pl) {
  Rat p = P(pl);
  return (p - 1) * (pow(p, 4) - pow(p, 3) + p * p - p + 1) *
         (5 * pow(p, 5) + 15 * pow(p, 4) + 13 * pow(p, 3) + 9 * p * p + 13 * p + 8) / (8 * (pow(p, 10) - 1));
}

MultiquadraticField field(std::vector<long> gens) {
  std::vector<Int> g;
  for (long x : gens) g.push_back(Int(x));
  return MultiquadraticField::from_generators(g);
}

}  // namespace

TEST(Profiles, Examples) {
  EXPECT_EQ(ramification_profile(field({-1}), Int(5)).kind, ProfileKind::TotallySplit);
  EXPECT_EQ(ramification_profile(field({5}), Int(5)).kind, ProfileKind::RamifiedQuadratic);
  // 2 = 3^2 is a square mod 7, so Q(sqrt 2, sqrt 3) only sees the class of 3.
  EXPECT_EQ(ramification_profile(field({2, 3}), Int(7)).kind, ProfileKind::UnramifiedQuadratic);
  EXPECT_EQ(ramification_profile(field({7, 3}), Int(7)).kind, ProfileKind::Biquadratic);
  EXPECT_EQ(ramification_profile(field({-1}), Int(7)).kind, ProfileKind::UnramifiedQuadratic);
  auto two = ramification_profile(field({-1}), Int(2));
  EXPECT_EQ(two.kind, ProfileKind::Coarse2);
  EXPECT_EQ(two.local_degree, 2);
  EXPECT_EQ(ramification_profile(field({17}), Int(2)).kind, ProfileKind::TotallySplit);
  EXPECT_EQ(ramification_profile(field({-1, 2}), Int(2)).local_degree, 4);
  EXPECT_EQ(ramification_profile(field({-1}), Int(3)).kind, ProfileKind::Coarse3);
  EXPECT_EQ(ramification_profile(field({7}), Int(3)).kind, ProfileKind::TotallySplit);
}

TEST(Profiles, SquareClassKey) {
  EXPECT_EQ(square_class_key(Rat(4), Int(5)), square_class_key(Rat(1), Int(5)));
  EXPECT_NE(square_class_key(Rat(2), Int(5)), square_class_key(Rat(1), Int(5)));
  EXPECT_EQ(square_class_key(Rat(17), Int(2)), square_class_key(Rat(1), Int(2)));
  EXPECT_EQ(square_class_key(make_rat(1, 5), Int(5)), square_class_key(Rat(5), Int(5)));
}

TEST(LocalFactors, MatchClosedForms) {
  for (std::uint64_t p : primes_up_to(1000)) {
    if (p < 5) continue;
    long pl = static_cast<long>(p);
    EXPECT_EQ(L_p(ProfileKind::RamifiedQuadratic, Int(pl)), ramified(pl));
    EXPECT_EQ(L_p(ProfileKind::UnramifiedQuadratic, Int(pl)), unramified(pl));
    EXPECT_EQ(L_p(ProfileKind::Biquadratic, Int(pl)), biquadratic(pl));
    EXPECT_EQ(L_p(ProfileKind::TotallySplit, Int(pl)), 1);
  }
}

TEST(LocalFactors, Coarse) {
  EXPECT_EQ(L_p(RamificationProfile{ProfileKind::Coarse2, 2}, Int(2)), make_rat(1, 16));
  EXPECT_EQ(L_p(RamificationProfile{ProfileKind::Coarse2, 4}, Int(2)), make_rat(1, 64));
  EXPECT_EQ(L_p(RamificationProfile{ProfileKind::Coarse3, 2}, Int(3)), make_rat(1, 4));
  EXPECT_EQ(L_p(RamificationProfile{ProfileKind::TotallySplit, 1}, Int(2)), 1);
  EXPECT_THROW(L_p(ProfileKind::RamifiedQuadratic, Int(3)), ArgumentError);
  EXPECT_THROW(L_p(RamificationProfile{ProfileKind::Coarse3, 2}, Int(2)), ArgumentError);
}

TEST(LocalFactors, Archimedean) {
  EXPECT_EQ(L_infinity(field({2})), make_rat(1, 2));
  EXPECT_EQ(L_infinity(field({-1})), make_rat(9, 20));
  EXPECT_EQ(L_infinity(field({2, -3})), make_rat(9, 20));
}

TEST(LocalFactors, RangesAndAsymptotics) {
  Rat r0 = make_rat(23, 24), b0 = make_rat(5, 8);
  for (std::uint64_t p : primes_up_to(10000)) {
    if (p < 5) continue;
    Int pi(static_cast<unsigned long>(p));
    Rat inv = make_rat(1, pi);
    Rat r = L_p(ProfileKind::RamifiedQuadratic, pi), u = L_p(ProfileKind::UnramifiedQuadratic, pi),
        b = L_p(ProfileKind::Biquadratic, pi);
    ASSERT_LE(abs(r - r0), 3 * inv) << p;
    ASSERT_LE(abs(u - 1), 3 * inv) << p;
    ASSERT_LE(abs(b - b0), 4 * inv) << p;
    for (const Rat& x : {r, u, b}) {
      ASSERT_GT(x, 0);
      ASSERT_LE(x, 1);
    }
  }
}

TEST(Mu, TableValues) {
  EXPECT_EQ(mu_density(ProfileKind::UnramifiedQuadratic, Int(5), 2), make_rat(7, 234375));
  Rat p = 5;
  EXPECT_EQ(mu_density(ProfileKind::RamifiedQuadratic, Int(5), 1),
            (p - 1) * (pow(p, 5) + 1) * (pow(p, 3) + p * p + 1) / (2 * pow(p, 9)));
  for (ProfileKind k : {ProfileKind::RamifiedQuadratic, ProfileKind::UnramifiedQuadratic, ProfileKind::Biquadratic}) {
    EXPECT_EQ(mu_density(k, Int(7), 3), 0);
    EXPECT_EQ(mu_density(k, Int(7), 5), 0);
  }
  EXPECT_THROW(mu_density(ProfileKind::Biquadratic, Int(3), 1), ArgumentError);
}

TEST(Mu, Ranges) {
  for (std::uint64_t p : primes_up_to(2000)) {
    if (p < 5) continue;
    Int pi(static_cast<unsigned long>(p));
    Rat cap = 1 - pow(make_rat(1, pi), 10);
    for (ProfileKind k : {ProfileKind::RamifiedQuadratic, ProfileKind::UnramifiedQuadratic, ProfileKind::Biquadratic}) {
      Rat m1 = mu_density(k, pi, 1), m2 = mu_density(k, pi, 2);
      ASSERT_GE(m1, 0);
      ASSERT_LT(m1, 1);
      ASSERT_GE(m2, 0);
      ASSERT_LT(m2, 1);
      ASSERT_LE(m1 + m2, cap);
    }
  }
}

// The check is the plain difference of the two sides; recompute it here.
TEST(Mu, MassIdentityCheckIsTheDifference) {
  for (long p : {5, 7, 11, 101}) {
    Int pi(p);
    Rat cap = 1 - pow(make_rat(1, pi), 10);
    for (ProfileKind k : {ProfileKind::RamifiedQuadratic, ProfileKind::UnramifiedQuadratic, ProfileKind::Biquadratic}) {
      Rat m1 = mu_density(k, pi, 1), m2 = mu_density(k, pi, 2);
      Rat m0 = cap - m1 - m2;
      EXPECT_EQ(mass_identity_check(k, pi), L_p(k, pi) - (m0 + m1 / 2 + m2 / 4) / cap);
    }
  }
}

TEST(Bounds, TailCertificate) { EXPECT_TRUE(unramified_tail_certificate()); }

TEST(Bounds, ABoundsOrdered) {
  for (std::vector<long> gens : std::vector<std::vector<long>>{{-1}, {2}, {5}, {-15}, {2, -3}, {5, 13}}) {
    DensityReport r = a_bounds(field(gens), 2000);
    EXPECT_GT(r.lower, 0);
    EXPECT_LE(r.lower, r.upper);
    EXPECT_LE(r.upper, 4);
    EXPECT_EQ(r.L_infinity, L_infinity(field(gens)));
  }
  EXPECT_THROW(a_bounds(field({4})), ArgumentError);
}

TEST(Bounds, ArchimedeanFactorEntersBothBounds) {
  // The upper bound is 4 L_inf times the factors at p >= 5.
  DensityReport r = a_bounds(field({-1}), 500);
  Rat prod = 4 * r.L_infinity;
  for (const auto& [p, entry] : r.factors) {
    if (p > 3) prod *= entry.second;
  }
  EXPECT_EQ(r.upper, prod);
  EXPECT_EQ(r.L_infinity, make_rat(9, 20));
}

TEST(Bounds, IntervalLeftEndpointAboveOne) {
  for (long D : {-1, 2, 3, 5, -5, 6, 7, -7, 10, 11}) {
    DensityReport r = a_bounds(field({D}), 2000);
    auto [lo, hi] = average_intersection_interval(r);
    EXPECT_GT(lo, 1);
    EXPECT_LE(lo, hi);
    EXPECT_GT(positive_proportion_lower(Int(D), 2000), 0);
  }
}

TEST(Bounds, RamifiedPrimesCarryTheRamifiedFactor) {
  DensityReport r = a_bounds(field({5 * 13 * 17}), 500);
  for (long p : {5, 13, 17}) {
    const auto& [profile, L] = r.factors.at(Int(p));
    EXPECT_EQ(profile.kind, ProfileKind::RamifiedQuadratic);
    EXPECT_EQ(L, ramified(p));
    EXPECT_LT(L, 1);
  }
}

TEST(Bounds, OmegaCheck) {
  OmegaCheck c = omega_bound_check(Int(5 * 13 * 17));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.count, 3);
  EXPECT_EQ(c.product, ramified(5) * ramified(13) * ramified(17));
  EXPECT_EQ(c.bound, pow(make_rat(23, 24), 3));
  for (long D : {-1, 6}) {
    OmegaCheck v = omega_bound_check(Int(D));
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.count, 0);
    EXPECT_EQ(v.product, 1);
  }
}

TEST(Support, Examples) {
  auto s = dependence_support(Int(1), Int(1), Int(5));
  EXPECT_EQ(s, (std::vector<Place>{Place::infinity(), Place::prime(Int(2)), Place::prime(Int(5)), Place::prime(Int(31))}));
  auto t = dependence_support(Int(0), Int(1), Int(-1));
  EXPECT_EQ(t, (std::vector<Place>{Place::infinity(), Place::prime(Int(2)), Place::prime(Int(3))}));
  EXPECT_THROW(dependence_support(Int(1), Int(1), Int(1)), ArgumentError);
}
