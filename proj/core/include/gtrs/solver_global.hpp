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
#include <string>
#include <string_view>
#include <vector>

#include "gtrs/canonicalize.hpp"
#include "gtrs/instance.hpp"
#include "gtrs/secular.hpp"
#include "gtrs/spectral.hpp"
#include "gtrs/tolerances.hpp"

namespace gtrs {

enum class GlobalStatus {
  Optimal,             // g(x) = 0, KKT + PSD certificate
  InteriorOptimal,     // inequality only: lambda = 0, A PSD, g(x) < 0
  HardCase,            // certificate holds with A + lambda B singular
  HardCaseIncomplete,  // singular endpoint, but no completion reaches g = 0
  NoPsdCertificate,    // no multiplier certifies global optimality
};

[[nodiscard]] std::string_view to_string(GlobalStatus status);

struct GlobalResult {
  GlobalStatus status = GlobalStatus::NoPsdCertificate;
  std::optional<Eigen::VectorXd> x;
  double lambda = 0.0;
  double value = 0.0;
  // Hard case: the solution set contains x + t * null_direction.
  std::optional<Eigen::VectorXd> null_direction;
  // In original multipliers.
  std::optional<MultiplierInterval> psd_interval;
  double kkt_residual = 0.0;
  double constraint_value = 0.0;
  double min_eigenvalue = 0.0;  // lambda_min(A + lambda B) at the solution
  std::string note;

  [[nodiscard]] bool has_minimizer() const { return x.has_value(); }
};

/// the global optimality conditions in canonical coordinates: an interior unconstrained
/// minimizer at lambda = 0, else a secular root inside the PSD interval,
/// else a hard-case completion at a singular endpoint. Every returned
/// minimizer is re-certified in original coordinates. Throws NotSD.
[[nodiscard]] GlobalResult solve_global(const GtrsInstance& inst,
                                        const Tolerances& tol = {});

// Same, reusing an existing reduction. `roots` are canonical multipliers;
// pass an empty list when the secular function could not be built.
[[nodiscard]] GlobalResult solve_global(const GtrsInstance& inst,
                                        const CanonicalForm& cf,
                                        const std::vector<SecularRoot>& roots,
                                        const Tolerances& tol = {});

// x(l) = -(A + lB)^{-1}(a + lb) in canonical coordinates; coordinates whose
// diagonal factor vanishes are set to zero.
[[nodiscard]] Eigen::VectorXd canonical_stationary_point(
    const CanonicalForm& cf, double lambda_hat);

}  // namespace gtrs
