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

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "gtrs/instance.hpp"
#include "gtrs/polynomial.hpp"
#include "gtrs/secular.hpp"

// Brute-force checks that share no code path with the solver: they work on
// the original instance (or on the secular function as a black box) and are
// used to refute or corroborate the solver's algebraic certificates.
namespace gtrs::oracle {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct NeighborhoodReport {
  bool passed = true;
  int samples = 0;             // feasible samples actually compared
  int projection_failures = 0;  // samples whose projection diverged
  double worst_violation = 0.0;  // min over samples of f(x') - f(x)
};

/// Samples `samples` points x + radius*d (d uniform on the sphere), keeps
/// feasible ones and projects the others onto g = 0 by up to 20 Newton steps
/// along grad g (equality sense projects every sample). Passes when no sample
/// lowers f by more than 1e-9 * (1 + |f(x)|).
[[nodiscard]] NeighborhoodReport neighborhood_test(
    const GtrsInstance& inst, const Eigen::VectorXd& x, double radius = 1e-3,
    int samples = 1000, std::uint64_t seed = kDefaultSeed);

enum class ReductionKind {
  Hyperbola,   // 2 B12 x1 x2 + c = 0, solved as x2 = k / x1
  ParabolaX2,  // B = diag(beta, 0), b2 != 0, solved for x2
  ParabolaX1,  // B = diag(0, beta), b1 != 0, solved for x1
};

struct UnivariateCriticalPoint {
  double t = 0.0;           // free variable
  Eigen::VectorXd x;        // point on the constraint curve
  double second_derivative = 0.0;
  bool is_local_min = false;
  double value = 0.0;       // f(x)
};

struct UnivariateReduction {
  ReductionKind kind = ReductionKind::Hyperbola;
  Polynomial critical;  // its real roots are the critical points
  std::vector<UnivariateCriticalPoint> points;  // ascending in t
};

/// Two-dimensional equality instances whose constraint can be solved for one
/// variable in closed form. For the hyperbola x2 = k/x1 the critical equation
/// is F'(t) t^3 / 2 = A11 t^4 + a1 t^3 - a2 k t - A22 k^2. Throws
/// NotReducible otherwise.
[[nodiscard]] UnivariateReduction univariate_reduce_2d(const GtrsInstance& inst);

/// Real roots of a polynomial by recursive isolation between the roots of
/// its derivative, followed by bisection.
[[nodiscard]] std::vector<double> isolate_real_roots(const Polynomial& p);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Sign changes of phi on an npts uniform grid over [lo, hi]. Samples within
/// 1e-6 (relative) of a pole are skipped and a change across a pole does not
/// count.
[[nodiscard]] std::vector<Bracket> phi_sweep(const SecularFunction& sf,
                                             double lo, double hi, int npts);

}  // namespace gtrs::oracle
