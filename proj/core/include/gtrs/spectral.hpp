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
#include <optional>

#include "gtrs/canonicalize.hpp"
#include "gtrs/tolerances.hpp"

namespace gtrs {

// Eigenvalue sign counts of a symmetric matrix.
struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Eigenvalues with |ev| <= tol * ||M||_2 count as zero.
[[nodiscard]] Inertia inertia(const Eigen::MatrixXd& M, double tol = 1e-10);

[[nodiscard]] double min_eigenvalue(const Eigen::MatrixXd& M);

// Closed multiplier interval; either end may be infinite.
struct MultiplierInterval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] bool contains(double lambda, double slack = 0.0) const {
    return lambda >= lo - slack && lambda <= hi + slack;
  }
  [[nodiscard]] bool has_interior() const { return lo < hi; }
};

/// {l : A + lB is PSD} in canonical coordinates, intersected with [0, inf)
/// for inequality sense; nullopt when empty. Multipliers are canonical, i.e.
/// sigma times the original ones.
[[nodiscard]] std::optional<MultiplierInterval> psd_interval(
    const CanonicalForm& cf, Sense sense, const Tolerances& tol = {});

/// Smallest eigenvalue of G restricted to the hyperplane orthogonal to
/// grad_g. Returns +inf when n = 1 (the hyperplane is trivial). Throws
/// ZeroGradient when grad_g = 0.
[[nodiscard]] double tangent_min_curvature(const Eigen::MatrixXd& G,
                                           const Eigen::VectorXd& grad_g);

}  // namespace gtrs
