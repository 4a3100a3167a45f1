#include <gtest/gtest.h>

#include "coneapprox/generators.hpp"
#include "coneapprox/supportedness.hpp"
#include "oracles.hpp"

using namespace coneapprox;

namespace {

Instance make(std::vector<Solution> sols, Sense sense = Sense::kMin) {
  return Instance(sense, std::move(sols));
}

const std::vector<double> kGammas = {kHalfPi, 1.8, 2 * kPi / 3, 3 * kPi / 4, 0.9 * kPi, kPi};

}  // namespace

TEST(OptimalPhiSet, ParetoConeIsEfficiency) {
  const auto inst = make({{"x1", {1, 2}}, {"x2", {2, 1}}, {"x3", {2, 2}}});
  const auto a = optimal_phi_set(inst, Angle(kHalfPi), "x1");
  EXPECT_TRUE(a.is_full());
  EXPECT_TRUE(a.contains(0.0));
  EXPECT_TRUE(optimal_phi_set(inst, Angle(kHalfPi), "x3").empty());
}

TEST(OptimalPhiSet, GenExample2FirstSolutionAlwaysOptimal) {
  for (const double alpha : {1.0, 2.0, 5.0}) {
    const auto inst = gen_example2(alpha, Angle(3 * kPi / 4));
    const auto s = optimal_phi_set(inst, Angle(3 * kPi / 4), "x1");
    EXPECT_TRUE(s.is_full()) << alpha;
    EXPECT_NEAR(s.ambient().hi, kPi / 4, 1e-15);
  }
}

TEST(OptimalPhiSet, MaximizationMiddlePointNeverOptimal) {
  const auto inst = gen_maximization(2.0, Angle(3 * kPi / 4));
  EXPECT_TRUE(optimal_phi_set(inst, Angle(3 * kPi / 4), "x3").empty());
  EXPECT_FALSE(is_gamma_supported(inst, Angle(3 * kPi / 4), "x3"));
  EXPECT_TRUE(efficient_set(inst).count("x3"));
}

TEST(OptimalPhiSet, Errors) {
  const auto inst = make({{"x1", {1, 2}}});
  try {
    optimal_phi_set(inst, Angle(3 * kPi / 4), "nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownId);
  }
  EXPECT_THROW(optimal_phi_set(inst, Angle(4.0), "x1"), Error);
}

TEST(IsGammaSupported, TightnessMiddlePointSitsOnTheBoundaryRay) {
  // f(x3) − f(x1) is parallel to the extreme ray of the cone at φ = φ̄_γ, so
  // x1 dominates x3 for φ ≤ φ̄_γ and x2 dominates it for φ ≥ φ̄_γ.
  const Angle g(3 * kPi / 4);
  const auto inst = gen_tightness(1.0, g, 0.1);
  EXPECT_FALSE(is_gamma_supported(inst, g, "x3"));
  std::set<std::string> seen;
  for (const double phi : phi_grid(g, 10000)) {
    const auto eff = oracle::cone_efficient(inst, g.radians(), phi);
    seen.insert(eff.begin(), eff.end());
  }
  EXPECT_FALSE(seen.count("x3"));
  EXPECT_TRUE(efficient_set(inst).count("x3"));
  EXPECT_TRUE(is_gamma_supported(inst, Angle(kHalfPi), "x3"));
}

TEST(IsGammaSupported, HalfplaneTiesDoNotDominate) {
  // At γ = π and α = 1 the middle point is the midpoint of x1 and x2, so all
  // three tie for equal weights; for γ < π the cone map is invertible.
  const auto inst = gen_tightness(1.0, Angle(kPi), 0.1);
  EXPECT_TRUE(is_gamma_supported(inst, Angle(kPi), "x3"));
  EXPECT_TRUE(optimal_phi_set(inst, Angle(kPi), "x3").contains(kPi / 4));
  EXPECT_TRUE(oracle::cone_efficient(inst, kPi, kPi / 4).count("x3"));
  EXPECT_FALSE(is_gamma_supported(gen_tightness(1.0, Angle(kPi - 1e-3), 0.1), Angle(kPi - 1e-3), "x3"));
  // With α > 1 the middle point lies strictly below the chord.
  EXPECT_TRUE(is_gamma_supported(gen_tightness(2.0, Angle(kPi), 0.1), Angle(kPi), "x3"));
}

TEST(GammaSupportedSet, Examples) {
  const auto three = make({{"x1", {1, 3}}, {"x2", {3, 1}}, {"x3", {2.9, 2.9}}});
  EXPECT_EQ(gamma_supported_set(three, Angle(kPi)), (IdSet{"x1", "x2"}));
  EXPECT_EQ(supported_set(three), (IdSet{"x1", "x2"}));
  EXPECT_EQ(gamma_supported_set(three, Angle(kHalfPi)), efficient_set(three));

  std::vector<Solution> line;
  for (int k = 0; k <= 10; ++k) line.push_back({"s" + std::to_string(k), {1.0 + k, 11.0 - k}});
  const auto segment = make(line);
  EXPECT_EQ(supported_set(segment), segment.all_ids());

  EXPECT_EQ(supported_set(make({{"only", {4, 5}}})), (IdSet{"only"}));
}

TEST(GammaSupportedSet, ConvexAndConcaveFronts) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto convex = gen_random_front(30, seed, FrontShape::kConvex);
    EXPECT_EQ(supported_set(convex), convex.all_ids());
    const auto concave = gen_random_front(30, seed, FrontShape::kConcave);
    const IdSet sup = supported_set(concave);
    ASSERT_EQ(sup.size(), 2u);
    std::size_t lo1 = 0;
    std::size_t lo2 = 0;
    for (std::size_t i = 0; i < concave.size(); ++i) {
      if (concave.f(i).c1 < concave.f(lo1).c1) lo1 = i;
      if (concave.f(i).c2 < concave.f(lo2).c2) lo2 = i;
    }
    EXPECT_TRUE(sup.count(concave.solutions()[lo1].id));
    EXPECT_TRUE(sup.count(concave.solutions()[lo2].id));
  }
}

TEST(GammaSupportedSet, EndpointsMatchEfficientAndSupported) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = oracle::random_cloud(40, seed, seed % 3 == 0 ? Sense::kMax : Sense::kMin);
    EXPECT_EQ(gamma_supported_set(inst, Angle(kHalfPi)), efficient_set(inst));
    EXPECT_EQ(gamma_supported_set(inst, Angle(kPi)), supported_set(inst));
  }
}

TEST(GammaSupportedSet, NestingAndEfficiency) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = oracle::random_cloud(40, seed);
    const IdSet eff = efficient_set(inst);
    IdSet previous = eff;
    for (const double g : kGammas) {
      const IdSet cur = gamma_supported_set(inst, Angle(g));
      for (const auto& id : cur) {
        EXPECT_TRUE(previous.count(id)) << "seed " << seed << " gamma " << g << " " << id;
        EXPECT_TRUE(eff.count(id));
      }
      previous = cur;
    }
  }
}

TEST(GridOracle, Examples) {
  const auto inst = make({{"x1", {1, 2}}, {"x2", {2, 1}}, {"x3", {2, 2}}});
  EXPECT_EQ(grid_oracle_gamma_supported(inst, Angle(kHalfPi), 2), efficient_set(inst));
  EXPECT_EQ(grid_oracle_gamma_supported(inst, Angle(kHalfPi), 50), efficient_set(inst));
  const auto ex2 = gen_example2(2.0, Angle(3 * kPi / 4));
  EXPECT_TRUE(grid_oracle_gamma_supported(ex2, Angle(3 * kPi / 4), 100).count("x1"));
  EXPECT_THROW(grid_oracle_gamma_supported(inst, Angle(kPi), 1), Error);
}

TEST(GridOracle, SandwichOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = oracle::random_cloud(20, seed);
    for (const double g : {2 * kPi / 3, 3 * kPi / 4, kPi}) {
      const std::size_t steps = 10000;
      const IdSet exact = gamma_supported_set(inst, Angle(g));
      const IdSet grid = grid_oracle_gamma_supported(inst, Angle(g), steps);
      const PhiInterval range = admissible_range(Angle(g));
      const double pitch = range.length() / static_cast<double>(steps - 1);
      for (const auto& id : grid) EXPECT_TRUE(exact.count(id)) << id;
      for (const auto& id : exact) {
        if (optimal_phi_set(inst, Angle(g), id).longest() > pitch) {
          EXPECT_TRUE(grid.count(id)) << "seed " << seed << " " << id;
        }
      }
    }
  }
}

TEST(PhiGrid, EndpointsIncluded) {
  const auto grid = phi_grid(Angle(3 * kPi / 4), 5);
  ASSERT_EQ(grid.size(), 5u);
  EXPECT_DOUBLE_EQ(grid.front(), 0.0);
  EXPECT_NEAR(grid.back(), kPi / 4, 1e-15);
  EXPECT_EQ(phi_grid(Angle(kHalfPi), 5).size(), 1u);
}
