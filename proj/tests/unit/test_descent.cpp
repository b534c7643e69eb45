#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "selmer/curve.hpp"
#include "selmer/descent.hpp"
#include "selmer/json_io.hpp"

using namespace selmer;

TEST(Enumeration, FastMatchesNaive) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int i = 0; i < 20; ++i) {
    BinaryQuartic g = BinaryQuartic::from_ints(c(rng), c(rng), c(rng), c(rng), c(rng));
    InvariantPair ij = invariants(g);
    Int I = ij.I.get_num(), J = ij.J.get_num();
    auto fast = enumerate_forms(I, J, 8, 2);
    auto naive = enumerate_forms_naive(I, J, 8);
    EXPECT_EQ(fast, naive) << to_string(g);
    if (g.a == 0 && g.b == 0) continue;
    EXPECT_FALSE(fast.empty());
  }
}

TEST(Enumeration, TooSmallBoundIsEmpty) {
  // Invariants of y^2 = x^3 + x + 1 scaled by (16, 64) need coefficients
  // larger than 1.
  EXPECT_TRUE(enumerate_forms(Int(-48), Int(-1728), 1).empty());
  EXPECT_FALSE(enumerate_forms(Int(-48), Int(-1728), 10).empty());
}

TEST(LinearFactor, Examples) {
  EXPECT_TRUE(has_rational_linear_factor({1, 0, 0, 0, -1}));
  EXPECT_FALSE(has_rational_linear_factor({1, 0, 0, 0, 1}));
  EXPECT_TRUE(has_rational_linear_factor({0, 3, 1, 0, 2}));
  // (2x - 3y)(x^3 + y^3) = 2x^4 - 3x^3 y + 2 x y^3 - 3 y^4
  EXPECT_TRUE(has_rational_linear_factor({2, -3, 0, 2, -3}));
  EXPECT_FALSE(has_rational_linear_factor({1, 0, -2, 0, 7}));
}

TEST(Moves, PreserveInvariants) {
  IntForm f{2, -1, 3, 4, -5};
  InvariantPair ij = invariants(to_quartic(f));
  for (const IntForm& g : {translate_x(f, 1), translate_x(f, -2), translate_y(f, 1), swap_xy(f), negate_y(f)}) {
    EXPECT_EQ(invariants(to_quartic(g)), ij);
  }
  EXPECT_EQ(translate_x(translate_x(f, 3), -3), f);
  EXPECT_EQ(swap_xy(swap_xy(f)), f);
}

TEST(Buckets, TranslateMergesDifferentInvariantsNever) {
  IntForm f{1, 0, 0, 0, 2};
  IntForm g = translate_x(f, 1);
  IntForm h{1, 0, 0, 0, 3};
  auto res = bucket_orbits({f, g, h}, 10, 100000);
  ASSERT_EQ(res.orbits.size(), 2u);
  std::size_t sizes = res.orbits[0].members.size() + res.orbits[1].members.size();
  EXPECT_EQ(sizes, 3u);
  for (const auto& o : res.orbits) {
    for (const auto& m : o.members) {
      EXPECT_EQ(invariants(to_quartic(m)), invariants(to_quartic(o.members.front())));
      EXPECT_FALSE(canonical_less(m, o.representative));
    }
  }
}

TEST(Report, ExampleCurveHasTwoClasses) {
  DescentOptions opt;
  opt.bound = 50;
  SelmerEstimate e = selmer_intersection_report(Int(-3), Int(1), TwistClassSet::generated_by({Int(-1)}), opt);
  EXPECT_TRUE(e.identity_present);
  EXPECT_GE(e.sel2_lower, 2);
  EXPECT_GE(e.certified_sel2_lower, 2);
  EXPECT_FALSE(e.q_class_count_certified);
  for (const auto& o : e.orbits) {
    if (o.locally_s_soluble) EXPECT_TRUE(o.locally_soluble);
  }
}

TEST(Report, MonotoneInBound) {
  TwistClassSet S = TwistClassSet::generated_by({Int(-1)});
  for (auto [A, B] : std::vector<std::pair<long, long>>{{-3, 1}, {1, 1}, {-2, 1}}) {
    long prev_sel = 0, prev_int = 0;
    for (long bound : {6, 12, 20}) {
      DescentOptions opt;
      opt.bound = bound;
      SelmerEstimate e = selmer_intersection_report(Int(A), Int(B), S, opt);
      EXPECT_GE(e.sel2_lower, prev_sel) << A << "," << B << " bound " << bound;
      EXPECT_GE(e.intersection_lower, prev_int);
      prev_sel = e.sel2_lower;
      prev_int = e.intersection_lower;
    }
  }
}

TEST(Report, IdentityClassFoundForSmallCurves) {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> c(-4, 4);
  int found = 0, tried = 0;
  while (tried < 20) {
    Int A = c(rng), B = c(rng);
    if (!epsilon_member(A, B)) continue;
    ++tried;
    DescentOptions opt;
    opt.bound = 50;
    SelmerEstimate e = selmer_intersection_report(A, B, TwistClassSet::trivial(), opt);
    found += e.identity_present;
    EXPECT_TRUE(e.identity_present) << A << "," << B;
  }
  EXPECT_EQ(found, 20);
}

TEST(ExamplePoints, AllHold) {
  auto checks = verify_example_points();
  ASSERT_EQ(checks.size(), 4u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.holds) << c.description;
    EXPECT_EQ(c.D * c.y * c.y, c.x * c.x * c.x + c.A * c.x + c.B);
  }
}

TEST(Cache, RoundTripMatchesColdRun) {
  auto dir = std::filesystem::temp_directory_path() / "selmer-cache-test";
  std::filesystem::remove_all(dir);
  DescentCache cache(dir);
  DescentOptions opt;
  opt.bound = 10;
  TwistClassSet S = TwistClassSet::generated_by({Int(-1)});
  EXPECT_FALSE(cache.load(Int(1), Int(1), S, opt).has_value());
  SelmerEstimate cold = selmer_intersection_report(Int(1), Int(1), S, opt);
  cache.store(cold, opt);
  auto warm = cache.load(Int(1), Int(1), S, opt);
  ASSERT_TRUE(warm.has_value());
  EXPECT_EQ(to_json(*warm).dump(), to_json(cold).dump());
  opt.bound = 11;
  EXPECT_FALSE(cache.load(Int(1), Int(1), S, opt).has_value());
  std::filesystem::remove_all(dir);
}
