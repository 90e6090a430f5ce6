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

#pragma once

// Instances and brute-force reference computations shared by the tests.
// Nothing here calls into the solver pipeline: reference values are
// computed from the original data with dense linear algebra or sampling.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "gtrs/instance.hpp"

namespace gtrs::testing {

inline GtrsInstance example1() {
  return GtrsInstance::create(Eigen::Vector3d(1, 2, -1).asDiagonal().toDenseMatrix(),
                              Eigen::Vector3d(1, 0, -1),
                              Eigen::Vector3d(1, -1, 0).asDiagonal().toDenseMatrix(),
                              Eigen::Vector3d(1, 0, 1), 1.0, Sense::Inequality);
}

// min y^2 + z^2 + 12y + 8z  s.t.  yz = k  (or yz - k <= 0).
inline GtrsInstance example3(Sense sense = Sense::Equality, double k = 1.0) {
  Eigen::Matrix2d B;
  B << 0, 0.5, 0.5, 0;
  return GtrsInstance::create(Eigen::Matrix2d::Identity(), Eigen::Vector2d(6, 4), B,
                              Eigen::Vector2d::Zero(), -k, sense);
}

// min x1^2 - x2^2 s.t. |x|^2 <= 1: a = b = 0.
inline GtrsInstance homogeneous() {
  return GtrsInstance::create(Eigen::Vector2d(1, -1).asDiagonal().toDenseMatrix(),
                              Eigen::Vector2d::Zero(), Eigen::Matrix2d::Identity(),
                              Eigen::Vector2d::Zero(), -1.0, Sense::Inequality);
}

// g(x(l)) with x(l) = -(A + lB)^{-1}(a + lb), by a dense LU solve.
inline double direct_phi(const GtrsInstance& inst, double lambda) {
  const Eigen::MatrixXd G = inst.A() + lambda * inst.B();
  const Eigen::VectorXd x = -G.fullPivLu().solve(inst.a() + lambda * inst.b());
  return eval_constraint(inst, x);
}

// Roots of a continuous function by sign changes on a uniform grid, each
// refined by bisection. Misses even-order roots by construction.
inline std::vector<double> grid_roots(const std::function<double(double)>& f, double lo,
                                      double hi, int npts) {
  std::vector<double> roots;
  double x0 = lo;
  double f0 = f(lo);
  for (int k = 1; k < npts; ++k) {
    const double x1 = lo + (hi - lo) * k / (npts - 1);
    const double f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1) && (f0 < 0) != (f1 < 0)) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200 && b - a > 0; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

// The quartic y^4 + 6y^3 - 4y - 1 from F(y) = y^2 + 1/y^2 + 12y + 8/y.
inline double example3_quartic(double y) { return (((y + 6.0) * y + 0.0) * y - 4.0) * y - 1.0; }
inline double example3_F(double y) { return y * y + 1.0 / (y * y) + 12.0 * y + 8.0 / y; }
inline double example3_F2(double y) {
  return 2.0 + 6.0 / std::pow(y, 4) + 16.0 / std::pow(y, 3);
}

// Smallest objective value over a uniform grid on [-r, r]^n. For equality
// sense every grid point is pushed onto g = 0 along grad g; for inequality
// sense infeasible points are pushed onto the boundary as well.
inline double grid_minimum(const GtrsInstance& inst, double r, int per_axis) {
  const int n = inst.n();
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> idx(n, 0);
  Eigen::VectorXd x(n);
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = -r + 2.0 * r * idx[i] / (per_axis - 1);
    Eigen::VectorXd y = x;
    bool ok = true;
    const bool need_projection =
        inst.sense() == Sense::Equality || eval_constraint(inst, y) > 0.0;
    if (need_projection) {
      ok = false;
      for (int it = 0; it < 30; ++it) {
        const double g = eval_constraint(inst, y);
        if (std::abs(g) <= 1e-13 * constraint_scale(inst, y)) {
          ok = true;
          break;
        }
        const Eigen::VectorXd grad = constraint_gradient(inst, y);
        if (grad.squaredNorm() == 0.0) break;
        y -= (g / grad.squaredNorm()) * grad;
        if (!y.allFinite()) break;
      }
    }
    if (ok) best = std::min(best, eval_objective(inst, y));
    int k = 0;
    while (k < n && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

inline Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = N(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ() *
         Eigen::MatrixXd::Identity(n, n);
}

inline Eigen::VectorXd random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = N(rng);
  return v;
}

// n = 2 equality instances with a closed-form constraint: either
// 2 h x1 x2 + c = 0 or an axis-aligned parabola. A is positive definite so
// (1, 0) is a definite combination.
inline GtrsInstance random_reducible_2d(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::normal_distribution<double> N;
  const Eigen::MatrixXd Q = random_orthogonal(2, rng);
  const Eigen::Vector2d d(0.2 + std::abs(N(rng)), 0.2 + std::abs(N(rng)));
  const Eigen::MatrixXd A = Q * d.asDiagonal() * Q.transpose();
  const Eigen::VectorXd a = 3.0 * random_vector(2, rng);
  Eigen::Matrix2d B = Eigen::Matrix2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();
  double c = 0.0;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {
      const double h = 0.5 + std::abs(U(rng));
      B(0, 1) = B(1, 0) = U(rng) < 0 ? -h : h;
      c = U(rng) < 0 ? -(0.2 + std::abs(N(rng))) : 0.2 + std::abs(N(rng));
      break;
    }
    case 1:
      B(0, 0) = U(rng) < 0 ? -(0.3 + std::abs(U(rng))) : 0.3 + std::abs(U(rng));
      b = Eigen::Vector2d(U(rng), U(rng) < 0 ? -(0.3 + std::abs(U(rng))) : 0.3 + std::abs(U(rng)));
      c = N(rng);
      break;
    default:
      B(1, 1) = U(rng) < 0 ? -(0.3 + std::abs(U(rng))) : 0.3 + std::abs(U(rng));
      b = Eigen::Vector2d(U(rng) < 0 ? -(0.3 + std::abs(U(rng))) : 0.3 + std::abs(U(rng)), U(rng));
      c = N(rng);
      break;
  }
  return GtrsInstance::create(A, a, B, b, c, Sense::Equality);
}

}  // namespace gtrs::testing
