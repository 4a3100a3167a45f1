#include <random>

#include <gtest/gtest.h>

#include "coneapprox/generators.hpp"
#include "coneapprox/instance.hpp"
#include "oracles.hpp"

using namespace coneapprox;

namespace {

Instance make(std::vector<Solution> sols, Sense sense = Sense::kMin) {
  return Instance(sense, std::move(sols));
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(make({{"x1", {1, 1}}})).empty());

  const auto bad = validate(make({{"x1", {0, 1}}}));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].kind, Violation::Kind::kNonpositiveObjective);
  EXPECT_EQ(bad[0].id, "x1");
  EXPECT_EQ(bad[0].component, 1);
  EXPECT_NE(bad[0].message().find("x1"), std::string::npos);
  EXPECT_NE(bad[0].message().find("1"), std::string::npos);

  const auto dup = validate(make({{"x1", {1, 1}}, {"x1", {2, 2}}}));
  ASSERT_EQ(dup.size(), 1u);
  EXPECT_EQ(dup[0].kind, Violation::Kind::kDuplicateId);
  EXPECT_EQ(dup[0].id, "x1");
}

TEST(Validate, EmptyAndNonfinite) {
  const auto empty = validate(make({}));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].kind, Violation::Kind::kEmptySet);
  const auto inf = validate(make({{"a", {1, std::numeric_limits<double>::infinity()}}}));
  ASSERT_EQ(inf.size(), 1u);
  EXPECT_EQ(inf[0].kind, Violation::Kind::kNonfiniteObjective);
  EXPECT_EQ(inf[0].component, 2);
  const auto blank = validate(make({{"", {1, 1}}}));
  ASSERT_EQ(blank.size(), 1u);
  EXPECT_EQ(blank[0].kind, Violation::Kind::kEmptyId);
}

TEST(Dominates, Examples) {
  const auto inst = make({{"a", {1, 1}}, {"b", {2, 2}}, {"c", {1, 2}}, {"d", {2, 1}}, {"e", {1, 1}}});
  EXPECT_TRUE(dominates(inst, "a", "b"));
  EXPECT_FALSE(dominates(inst, "c", "d"));
  EXPECT_FALSE(dominates(inst, "a", "e"));
  EXPECT_FALSE(dominates(inst, "b", "a"));
  const auto mx = make({{"a", {1, 1}}, {"b", {2, 2}}}, Sense::kMax);
  EXPECT_TRUE(dominates(mx, "b", "a"));
  EXPECT_FALSE(dominates(mx, "a", "b"));
  try {
    dominates(inst, "a", "zz");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownId);
  }
}

TEST(EfficientSet, Examples) {
  EXPECT_EQ(efficient_set(make({{"x1", {1, 2}}, {"x2", {2, 1}}, {"x3", {2, 2}}})),
            (IdSet{"x1", "x2"}));
  EXPECT_EQ(efficient_set(make({{"x1", {1, 1}}, {"x2", {2, 1.0 / 3.0}}})), (IdSet{"x1", "x2"}));
  EXPECT_EQ(efficient_set(make({{"x1", {1, 1}}, {"x2", {1, 1}}})), (IdSet{"x1", "x2"}));
}

TEST(EfficientSet, ToleranceTies) {
  // Within τ_val of equal: neither dominates the other.
  EXPECT_EQ(efficient_set(make({{"a", {1, 1}}, {"b", {1 + 5e-10, 1 + 5e-10}}})), (IdSet{"a", "b"}));
  EXPECT_EQ(efficient_set(make({{"a", {1, 1}}, {"b", {1 + 5e-10, 2}}})), (IdSet{"a"}));
  EXPECT_EQ(efficient_set(make({{"a", {1, 2}}, {"b", {1, 3}}})), (IdSet{"a"}));
}

TEST(EfficientSet, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed * 2;
    for (const bool ties : {false, true}) {
      for (const Sense sense : {Sense::kMin, Sense::kMax}) {
        const auto inst = oracle::random_cloud(n, seed, sense, ties);
        EXPECT_EQ(efficient_set(inst), oracle::efficient(inst)) << seed;
      }
    }
  }
}

TEST(EfficientSet, EqualImagesShareStatus) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = oracle::random_cloud(60, seed, Sense::kMin, true);
    const IdSet eff = efficient_set(inst);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      for (std::size_t j = 0; j < inst.size(); ++j) {
        if (inst.f(i) == inst.f(j)) {
          EXPECT_EQ(eff.count(inst.solutions()[i].id), eff.count(inst.solutions()[j].id));
        }
      }
    }
  }
}

TEST(EfficientSet, ExternalStability) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = oracle::random_cloud(80, seed);
    const IdSet eff = efficient_set(inst);
    for (const auto& s : inst.solutions()) {
      if (eff.count(s.id)) continue;
      bool covered = false;
      for (const auto& e : eff) covered = covered || dominates(inst, e, s.id);
      EXPECT_TRUE(covered) << s.id;
    }
  }
}

TEST(TransformInstance, Examples) {
  const auto inst = make({{"x1", {1, 1}}, {"x2", {2, 1.0 / 3.0}}});
  const auto same = transform_instance(inst, ConeParams::pareto());
  EXPECT_EQ(same.f("x2"), inst.f("x2"));

  const auto t = transform_instance(inst, ConeParams(Angle(3 * kPi / 4), Angle(kPi / 4)));
  EXPECT_NEAR(t.f("x1").c1, 1.0, 1e-12);
  EXPECT_NEAR(t.f("x1").c2, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(t.f("x2").c1, 2.0, 1e-12);
  EXPECT_NEAR(t.f("x2").c2, 1.6499158227686108903, 1e-12);

  const auto h = transform_instance(make({{"x", {1, 1}}}), ConeParams(Angle(kPi), Angle(kPi / 4)));
  EXPECT_NEAR(h.f("x").c1, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(h.f("x").c2, std::sqrt(2.0), 1e-12);

  try {
    transform_instance(make({{"x", {1, 1}}}, Sense::kMax), ConeParams::pareto());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedSense);
  }
}

TEST(ConeEfficientSet, Examples) {
  const auto ex1 = gen_example1(2.0, Angle(3 * kPi / 4), Angle(kPi / 4));
  EXPECT_EQ(cone_efficient_set(ex1, ConeParams(Angle(3 * kPi / 4), Angle(kPi / 4))), (IdSet{"x1"}));

  const auto ex2 = gen_example2(2.0, Angle(3 * kPi / 4));
  for (int k = 0; k <= 100; ++k) {
    const ConeParams p(Angle(3 * kPi / 4), Angle(kPi / 4 * k / 100.0));
    EXPECT_TRUE(cone_efficient_set(ex2, p).count("x1")) << k;
  }
}

TEST(ConeEfficientSet, ParetoConeIsEfficientSet) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const Sense sense : {Sense::kMin, Sense::kMax}) {
      const auto inst = oracle::random_cloud(50, seed, sense, seed % 2 == 0);
      EXPECT_EQ(cone_efficient_set(inst, ConeParams::pareto()), efficient_set(inst));
    }
  }
}

TEST(ConeEfficientSet, EqualsEfficientSetOfTransformedInstance) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = oracle::random_cloud(40, seed);
    const double g = kHalfPi + 0.001 + (kHalfPi - 0.002) * u(rng);
    const ConeParams p(Angle(g), Angle((g - kHalfPi) * u(rng)));
    const IdSet direct = cone_efficient_set(inst, p);
    EXPECT_EQ(direct, efficient_set(transform_instance(inst, p)));
    EXPECT_EQ(direct, oracle::cone_efficient(inst, p.gamma().radians(), p.phi().radians()));
  }
}

TEST(ConeEfficientSet, MaxSenseUsesReversedCone) {
  const auto inst = gen_maximization(2.0, Angle(3 * kPi / 4));
  const ConeParams p(Angle(3 * kPi / 4), Angle(kPi / 8));
  const IdSet got = cone_efficient_set(inst, p);
  EXPECT_EQ(got, oracle::cone_efficient(inst, 3 * kPi / 4, kPi / 8));
  EXPECT_FALSE(got.count("x3"));
}
