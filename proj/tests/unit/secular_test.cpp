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

#include "gtrs/secular.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "gtrs/errors.hpp"
#include "gtrs/generate.hpp"
#include "gtrs/oracle.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

SecularFunction secular_of(const GtrsInstance& inst) {
  return build_secular(reduce_to_standard_form(inst));
}

double example3_phi(double l) {
  return 25.0 / std::pow(1.0 + l / 2.0, 2) - 1.0 / std::pow(1.0 - l / 2.0, 2) - 1.0;
}

TEST(Secular, Example1IsAffine) {
  const SecularFunction sf = secular_of(testing::example1());
  for (double l = -5.0; l <= 5.0; l += 0.25) {
    if (std::abs(l - 1.0) < 1e-9 || std::abs(l + 1.0) < 1e-9) continue;  // poles of x(l)
    EXPECT_NEAR(eval_phi(sf, l), 2.0 * (l - 1.0), 1e-12);
    EXPECT_NEAR(eval_phi(sf, l), testing::direct_phi(testing::example1(), l), 1e-10);
  }
  EXPECT_EQ(eval_phi(sf, 1.0), 0.0);
  EXPECT_EQ(eval_phi_prime(sf, 1.0), 2.0);
}

TEST(Secular, Example1Roots) {
  const auto roots = find_real_roots(secular_of(testing::example1()));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].lambda, 1.0, 1e-12);
  EXPECT_LT(roots[0].residual, 1e-12);
  EXPECT_FALSE(roots[0].multiple);
}

TEST(Secular, HomogeneousIsConstant) {
  const SecularFunction sf = secular_of(testing::homogeneous());
  for (double l : {-3.0, -0.5, 0.0, 0.5, 7.0}) {
    EXPECT_EQ(eval_phi(sf, l), -1.0);
    EXPECT_EQ(eval_phi_prime(sf, l), 0.0);
  }
  EXPECT_TRUE(find_real_roots(sf).empty());
}

TEST(Secular, Example3ClosedForm) {
  const SecularFunction sf = secular_of(testing::example3());
  EXPECT_NEAR(eval_phi(sf, 0.0), 23.0, 1e-12);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-20.0, 20.0);
  for (int k = 0; k < 100; ++k) {
    const double l = U(rng);
    if (std::abs(std::abs(l) - 2.0) < 1e-3) continue;
    EXPECT_NEAR(eval_phi(sf, l), example3_phi(l), 1e-9 * (1.0 + std::abs(example3_phi(l))));
    EXPECT_NEAR(eval_phi(sf, l), testing::direct_phi(testing::example3(), l),
                1e-9 * (1.0 + std::abs(example3_phi(l))));
  }
}

TEST(Secular, Example3HasFourRoots) {
  const SecularFunction sf = secular_of(testing::example3());
  const auto roots = find_real_roots(sf);
  ASSERT_EQ(roots.size(), 4u);
  // Independent reference: sign changes of the closed form, away from +-2.
  std::vector<double> ref;
  for (auto [lo, hi] : {std::pair{-100.0, -2.0 - 1e-9}, std::pair{-2.0 + 1e-9, 2.0 - 1e-9},
                        std::pair{2.0 + 1e-9, 100.0}}) {
    for (double r : testing::grid_roots(example3_phi, lo, hi, 200001)) ref.push_back(r);
  }
  ASSERT_EQ(ref.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(roots[i].lambda, ref[i], 1e-9 * (1.0 + std::abs(ref[i])));
  EXPECT_LE(static_cast<int>(roots.size()), sf.root_bound());
}

TEST(Secular, PoleEvaluationThrows) {
  const SecularFunction sf = secular_of(testing::example3());
  ASSERT_FALSE(sf.active_poles.empty());
  EXPECT_THROW((void)eval_phi(sf, sf.active_poles.front()), PoleEvaluation);
  EXPECT_THROW((void)eval_phi_prime(sf, sf.active_poles.back()), PoleEvaluation);
}

TEST(Secular, SingularFreeBlock) {
  const GtrsInstance inst = GtrsInstance::create(
      VectorXd{{1.0, 0.0}}.asDiagonal(), VectorXd{{0.0, 1.0}},
      VectorXd{{1.0, 0.0}}.asDiagonal(), VectorXd::Zero(2), -1.0, Sense::Equality);
  EXPECT_THROW((void)secular_of(inst), SingularFreeBlock);
}

TEST(Secular, NumeratorMatchesTermwiseEvaluation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-10.0, 10.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + seed % 6;
    const int n1 = 1 + static_cast<int>(seed / 6) % n;
    const SecularFunction sf = secular_of(random_instance({n, n1, Sense::Equality, seed}));
    EXPECT_LE(sf.numerator.degree(), 2 * std::min(n1 + 1, n));
    for (int k = 0; k < 20; ++k) {
      const double l = U(rng);
      bool near = false;
      for (double p : sf.poles) near = near || std::abs(l - p) <= 1e-2 * (1.0 + std::abs(p));
      if (near) continue;
      const double phi = eval_phi(sf, l);
      EXPECT_NEAR(sf.numerator(l) / sf.denominator(l), phi, 1e-8 * (1.0 + std::abs(phi)))
          << "seed " << seed << " lambda " << l;
    }
  }
}

// Dense sweep of each pole-free interval over [-1e3, 1e3].
TEST(Secular, RootCompletenessAgainstDenseSweep) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + seed % 6;
    const int n1 = 1 + static_cast<int>(seed / 6) % n;
    const SecularFunction sf =
        secular_of(random_instance({n, n1, seed % 2 ? Sense::Equality : Sense::Inequality, seed}));
    const auto roots = find_real_roots(sf);
    ASSERT_LE(static_cast<int>(roots.size()), sf.root_bound());
    for (const auto& r : roots) {
      EXPECT_LE(r.residual, 1e-8 * (1.0 + phi_magnitude(sf, r.lambda)));
    }
    std::vector<double> knots{-1e3};
    for (double p : sf.active_poles)
      if (p > -1e3 && p < 1e3) knots.push_back(p);
    knots.push_back(1e3);
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      const double w = knots[k + 1] - knots[k];
      const double lo = knots[k] + 1e-6 * (1.0 + std::abs(knots[k]));
      const double hi = knots[k + 1] - 1e-6 * (1.0 + std::abs(knots[k + 1]));
      if (!(lo < hi) || w <= 0) continue;
      for (const auto& br : oracle::phi_sweep(sf, lo, hi, 100000)) {
        bool matched = false;
        for (const auto& r : roots)
          matched = matched || (r.lambda >= br.lo - 1e-6 && r.lambda <= br.hi + 1e-6);
        EXPECT_TRUE(matched) << "seed " << seed << " bracket [" << br.lo << ", " << br.hi << "]";
      }
    }
  }
}

}  // namespace
}  // namespace gtrs
