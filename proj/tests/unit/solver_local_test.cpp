// Copyright 2026 The gtrs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtrs/solver_local.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "gtrs/errors.hpp"
#include "gtrs/generate.hpp"
#include "gtrs/oracle.hpp"
#include "gtrs/solver_global.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<KktPoint> classified(const GtrsInstance& inst) {
  KktEnumeration e = enumerate_kkt(inst);
  for (KktPoint& p : e.points) p = classify(std::move(p), inst.sense());
  return e.points;
}

TEST(EnumerateKkt, Example1) {
  const KktEnumeration e = enumerate_kkt(testing::example1());
  ASSERT_EQ(e.points.size(), 1u);
  const KktPoint& p = e.points[0];
  EXPECT_NEAR((p.x - VectorXd{{-1.0, 0.0, 0.0}}).norm(), 0.0, 1e-12);
  EXPECT_NEAR(p.lambda, 1.0, 1e-12);
  EXPECT_EQ(p.inertia_G, (Inertia{2, 0, 1}));
  EXPECT_NEAR(p.phi_prime, 2.0, 1e-12);
  EXPECT_NEAR(p.tangent_curv, 1.0, 1e-12);
}

TEST(EnumerateKkt, HomogeneousIsEmpty) {
  EXPECT_TRUE(enumerate_kkt(testing::homogeneous()).points.empty());
  EXPECT_TRUE(enumerate_local_nonglobal(testing::homogeneous()).empty());
}

TEST(EnumerateKkt, Example3MatchesQuarticRoots) {
  const auto ys = testing::grid_roots(testing::example3_quartic, -10.0, 10.0, 100001);
  ASSERT_EQ(ys.size(), 4u);
  const KktEnumeration e = enumerate_kkt(testing::example3());
  ASSERT_EQ(e.points.size(), 4u);
  for (double y : ys) {
    const auto hit = std::count_if(e.points.begin(), e.points.end(), [&](const KktPoint& p) {
      return std::abs(p.x[0] - y) <= 1e-6 && std::abs(p.x[1] - 1.0 / y) <= 1e-6;
    });
    EXPECT_EQ(hit, 1) << "y = " << y;
  }
}

TEST(Classify, Example1IsLocalNonglobal) {
  const auto pts = classified(testing::example1());
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].classification, Classification::LocalNonglobal);
  EXPECT_TRUE(pts[0].certificates.all());
  EXPECT_FALSE(pts[0].borderline);
}

TEST(Classify, Example3Labels) {
  const auto pts = classified(testing::example3());
  ASSERT_EQ(pts.size(), 4u);
  const GlobalResult g = solve_global(testing::example3());
  int global = 0, local = 0, saddle = 0;
  for (const KktPoint& p : pts) {
    switch (p.classification) {
      case Classification::GlobalCandidate:
        ++global;
        EXPECT_NEAR(p.value, g.value, 1e-9);
        break;
      case Classification::LocalNonglobal:
        ++local;
        EXPECT_TRUE(above_global(p, g.value));
        EXPECT_GT(testing::example3_F2(p.x[0]), 0.0);
        break;
      case Classification::SaddleOrMax:
        ++saddle;
        EXPECT_LT(testing::example3_F2(p.x[0]), 0.0);
        break;
    }
  }
  EXPECT_EQ(global, 1);
  EXPECT_EQ(local, 2);
  EXPECT_EQ(saddle, 1);
}

TEST(Classify, TwoNegativeEigenvaluesIsSaddle) {
  KktPoint p;
  p.x = VectorXd::Zero(3);
  p.lambda = 1.0;
  p.inertia_G = {1, 0, 2};
  p.phi_prime = 1.0;
  p.phi_prime_scale = 1.0;
  p.tangent_curv = 1.0;
  p.G_norm = 1.0;
  EXPECT_EQ(classify(p, Sense::Equality).classification, Classification::SaddleOrMax);
  EXPECT_FALSE(classify(p, Sense::Equality).certificates.one_negative);
}

TEST(EnumerateLocal, Example1) {
  const auto loc = enumerate_local_nonglobal(testing::example1());
  ASSERT_EQ(loc.size(), 1u);
  EXPECT_NEAR(loc[0].lambda, 1.0, 1e-12);
}

TEST(EnumerateLocal, Example3AttainsTheBound) {
  const auto loc = enumerate_local_nonglobal(testing::example3());
  EXPECT_EQ(loc.size(), 2u);
  const CanonicalForm cf = reduce_to_standard_form(testing::example3());
  EXPECT_EQ(static_cast<int>(loc.size()), std::min(cf.n1 + 1, cf.n()));
}

// For yz - 1 <= 0 the equality point with negative multiplier is not a
// local minimizer: stepping into yz < 1 lowers the objective.
TEST(EnumerateLocal, Example3InequalityVariant) {
  const GtrsInstance le = testing::example3(Sense::Inequality);
  const auto loc = enumerate_local_nonglobal(le);
  ASSERT_EQ(loc.size(), 1u);
  EXPECT_GT(loc[0].lambda, 0.0);
  EXPECT_NEAR(loc[0].lambda, 3.2258950124, 1e-8);
  EXPECT_TRUE(oracle::neighborhood_test(le, loc[0].x).passed);

  const auto pts = classified(le);
  const auto neg = std::find_if(pts.begin(), pts.end(),
                                [](const KktPoint& p) { return p.lambda < 0.0; });
  ASSERT_NE(neg, pts.end());
  EXPECT_EQ(neg->classification, Classification::SaddleOrMax);
  EXPECT_FALSE(neg->certificates.strict_complementarity);
  const auto report = oracle::neighborhood_test(le, neg->x);
  EXPECT_FALSE(report.passed);
  // The equality version of the same point is a local minimizer.
  EXPECT_TRUE(oracle::neighborhood_test(testing::example3(), neg->x).passed);
}

TEST(SelectLocal, CountBoundAndIsolation) {
  KktPoint p;
  p.classification = Classification::LocalNonglobal;
  p.x = VectorXd{{0.0, 0.0}};
  std::vector<KktPoint> pts{p, p};
  pts[1].x = VectorXd{{1.0, 0.0}};
  EXPECT_EQ(select_local_nonglobal(pts, 2, 2).size(), 2u);
  EXPECT_THROW((void)select_local_nonglobal(pts, 1, 1), CountBoundViolated);
  pts[1].x = VectorXd{{1e-8, 0.0}};
  EXPECT_THROW((void)select_local_nonglobal(pts, 2, 2), CountBoundViolated);
}

// Local minimizers of the univariate reduction coincide with the certified
// local minimizers (global candidates and local nonglobal ones).
TEST(EnumerateLocal, CompletenessAgainstUnivariateOracle) {
  std::mt19937_64 rng(2024);
  int compared = 0;
  while (compared < 30) {
    const GtrsInstance inst = testing::random_reducible_2d(rng);
    const auto red = oracle::univariate_reduce_2d(inst);
    const auto pts = classified(inst);
    std::vector<VectorXd> solver, ref;
    for (const KktPoint& p : pts)
      if (p.classification != Classification::SaddleOrMax) solver.push_back(p.x);
    for (const auto& cp : red.points)
      if (cp.is_local_min) ref.push_back(cp.x);
    ASSERT_EQ(solver.size(), ref.size()) << serialize_instance(inst);
    for (const VectorXd& r : ref) {
      const bool found = std::any_of(solver.begin(), solver.end(), [&](const VectorXd& s) {
        return (s - r).norm() <= 1e-6 * (1.0 + r.norm());
      });
      EXPECT_TRUE(found) << serialize_instance(inst);
    }
    ++compared;
  }
}

TEST(EnumerateLocal, SoundnessOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + seed % 4;
    const Sense sense = seed % 2 ? Sense::Equality : Sense::Inequality;
    const GtrsInstance inst = random_instance({n, 1 + static_cast<int>(seed / 4) % n, sense, seed});
    const auto loc = enumerate_local_nonglobal(inst);
    const GlobalResult g = solve_global(inst);
    for (const KktPoint& p : loc) {
      EXPECT_TRUE(oracle::neighborhood_test(inst, p.x).passed) << "seed " << seed;
      if (g.has_minimizer()) EXPECT_TRUE(above_global(p, g.value)) << "seed " << seed;
      if (sense == Sense::Inequality) EXPECT_GT(p.lambda, 0.0);
      EXPECT_EQ(p.inertia_G, (Inertia{n - 1, 0, 1}));
    }
  }
}

}  // namespace
}  // namespace gtrs
