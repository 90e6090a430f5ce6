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

namespace gtrs {

// Thresholds used by the certificates. All relative thresholds are scaled by
// a problem-dependent magnitude at the point of use.
struct Tolerances {
  // Asymmetry above this triggers a warning when symmetrizing input.
  double symmetry = 1e-12;
  // Pencil definiteness: witness eigenvalue must exceed this times ||A||+||B||.
  double definiteness = 1e-10;
  // Angular resolution of the definite-combination search.
  double theta_resolution = 1e-10;
  // Diagonal constraint entries below this (relative) are treated as zero.
  double beta_zero = 1e-10;
  // Constraint constant below this (absolute) is treated as zero.
  double c_zero = 1e-12;
  // Eigenvalues below this (relative to the spectral norm) count as zero.
  double inertia = 1e-10;
  // Active-constraint and KKT-residual certificates (relative).
  double feasibility = 1e-8;
  double kkt_residual = 1e-8;
  // Tangent-subspace curvature must exceed this times ||G||.
  double curvature = 1e-8;
  // Secular slope must exceed this times the slope's term magnitude.
  double phi_prime = 1e-10;
  // A + lambda B counts as singular when a diagonal factor is below this.
  double singular = 1e-12;
  // Two multipliers closer than this (relative) are merged.
  double root_merge = 1e-8;
  // Strict complementarity: inequality multipliers must exceed this.
  double multiplier = 1e-10;
  // Local minimizers closer than this are not isolated.
  double isolation = 1e-6;

  // Replaces every certificate threshold by `tol`, which is what the CLI's
  // --tol flag does. Structural thresholds (symmetrization, beta truncation,
  // constant snapping) keep their defaults.
  [[nodiscard]] static Tolerances uniform(double tol) {
    Tolerances t;
    t.definiteness = tol;
    t.inertia = tol;
    t.feasibility = tol;
    t.kkt_residual = tol;
    t.curvature = tol;
    t.phi_prime = tol;
    t.singular = tol;
    return t;
  }
};

}  // namespace gtrs
