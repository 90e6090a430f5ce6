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

#include "gtrs/solver_global.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "gtrs/generate.hpp"
#include "gtrs/spectral.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST(SolveGlobal, Example1HasNoCertificate) {
  const GlobalResult r = solve_global(testing::example1());
  EXPECT_EQ(r.status, GlobalStatus::NoPsdCertificate);
  EXPECT_FALSE(r.has_minimizer());
}

TEST(SolveGlobal, ConvexBallBoundaryAtZeroMultiplier) {
  const GtrsInstance inst =
      GtrsInstance::create(MatrixXd::Identity(2, 2), VectorXd{{1.0, 0.0}},
                           MatrixXd::Identity(2, 2), VectorXd::Zero(2), -1.0, Sense::Inequality);
  const GlobalResult r = solve_global(inst);
  ASSERT_TRUE(r.has_minimizer());
  EXPECT_EQ(r.status, GlobalStatus::Optimal);
  EXPECT_EQ(r.lambda, 0.0);
  EXPECT_NEAR((*r.x - VectorXd{{-1.0, 0.0}}).norm(), 0.0, 1e-12);
  EXPECT_NEAR(r.value, -1.0, 1e-12);
  EXPECT_LE(r.value, testing::grid_minimum(inst, 1.5, 601) + 1e-6);
}

TEST(SolveGlobal, InteriorMinimizer) {
  const GtrsInstance inst =
      GtrsInstance::create(MatrixXd::Identity(2, 2), VectorXd{{0.1, 0.0}},
                           MatrixXd::Identity(2, 2), VectorXd::Zero(2), -1.0, Sense::Inequality);
  const GlobalResult r = solve_global(inst);
  EXPECT_EQ(r.status, GlobalStatus::InteriorOptimal);
  EXPECT_EQ(r.lambda, 0.0);
  EXPECT_NEAR((*r.x - VectorXd{{-0.1, 0.0}}).norm(), 0.0, 1e-14);
  EXPECT_LT(r.constraint_value, 0.0);
}

TEST(SolveGlobal, Example3MatchesUnivariateMinimum) {
  const GlobalResult r = solve_global(testing::example3());
  ASSERT_EQ(r.status, GlobalStatus::Optimal);
  ASSERT_TRUE(r.psd_interval.has_value());
  EXPECT_TRUE(r.psd_interval->contains(r.lambda));
  // min over y of y^2 + 1/y^2 + 12y + 8/y, by dense sampling and refinement.
  double best = 1e300;
  double ybest = 0.0;
  for (int k = 0; k <= 2000000; ++k) {
    const double y = -50.0 + 100.0 * k / 2000000.0;
    if (std::abs(y) < 1e-9) continue;
    if (const double F = testing::example3_F(y); F < best) {
      best = F;
      ybest = y;
    }
  }
  EXPECT_NEAR(r.value, best, 1e-6);
  EXPECT_NEAR((*r.x)[0], ybest, 1e-4);
  for (double y : testing::grid_roots(testing::example3_quartic, -10.0, 10.0, 100001))
    EXPECT_LE(r.value, testing::example3_F(y) + 1e-9);
}

TEST(SolveGlobal, HardCaseCompletion) {
  const GlobalResult r = solve_global(testing::homogeneous());
  ASSERT_EQ(r.status, GlobalStatus::HardCase);
  EXPECT_NEAR(r.value, -1.0, 1e-12);
  EXPECT_NEAR(r.lambda, 1.0, 1e-12);
  ASSERT_TRUE(r.null_direction.has_value());
  EXPECT_NEAR(std::abs((*r.null_direction)[1]), 1.0, 1e-12);
  // tau ties are broken towards the positive root.
  EXPECT_NEAR((*r.x)[1], 1.0, 1e-12);
}

TEST(SolveGlobal, CertificatesOnRandomInstances) {
  int solved = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + seed % 3;
    const GtrsInstance inst = random_instance(
        {n, 1 + static_cast<int>(seed / 3) % n, seed % 2 ? Sense::Equality : Sense::Inequality, seed});
    const GlobalResult r = solve_global(inst);
    if (!r.has_minimizer()) continue;
    ++solved;
    const double scale = inst.matrix_scale() * (1.0 + std::abs(r.lambda));
    EXPECT_LE(r.kkt_residual, 1e-8 * kkt_scale(inst, *r.x, r.lambda));
    EXPECT_GE(min_eigenvalue(inst.A() + r.lambda * inst.B()), -1e-8 * scale);
    if (inst.sense() == Sense::Inequality) EXPECT_GE(r.lambda, 0.0);
    if (n <= 2) {
      const double box = 2.0 * (1.0 + r.x->cwiseAbs().maxCoeff());
      EXPECT_LE(r.value, testing::grid_minimum(inst, box, n == 1 ? 20001 : 301) + 1e-6)
          << "seed " << seed;
    }
  }
  EXPECT_GE(solved, 50);
}

}  // namespace
}  // namespace gtrs
