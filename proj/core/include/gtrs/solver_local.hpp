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
#include <string_view>
#include <vector>

#include "gtrs/canonicalize.hpp"
#include "gtrs/instance.hpp"
#include "gtrs/oracle.hpp"
#include "gtrs/secular.hpp"
#include "gtrs/spectral.hpp"
#include "gtrs/tolerances.hpp"

namespace gtrs {

enum class Classification { GlobalCandidate, LocalNonglobal, SaddleOrMax };

[[nodiscard]] std::string_view to_string(Classification c);

// The five conditions that together characterize a local nonglobal
// minimizer (for inequality sense, together with lambda > 0).
struct Certificates {
  bool active = false;                  // g(x) = 0
  bool strict_complementarity = false;  // lambda > 0 (always true for equality)
  bool one_negative = false;            // inertia(G) = (n-1, 0, 1)
  bool phi_prime_positive = false;      // phi'(lambda) > 0
  bool second_order_positive = false;   // G restricted to grad g's complement is PD

  [[nodiscard]] bool all() const {
    return active && strict_complementarity && one_negative &&
           phi_prime_positive && second_order_positive;
  }
};

/// A stationary point of the Lagrangian f + lambda g, in original
/// coordinates, with G = A + lambda B.
struct KktPoint {
  Eigen::VectorXd x;
  double lambda = 0.0;
  Inertia inertia_G;
  double phi_prime = 0.0;        // -2 d'G^{-1}d with d = Bx + b
  double phi_prime_scale = 0.0;  // 2 d'|G|^{-1}d
  double tangent_curv = 0.0;
  double G_norm = 0.0;           // spectral norm of G
  double value = 0.0;
  double constraint_value = 0.0;
  double constraint_scale = 1.0;  // magnitude of the terms of g at x
  double kkt_residual = 0.0;
  Classification classification = Classification::SaddleOrMax;
  Certificates certificates;
  // The tangent curvature is within tolerance of zero, so the second-order
  // certificate cannot decide.
  bool borderline = false;
  // Present when the neighborhood oracle was run on this point.
  std::optional<oracle::NeighborhoodReport> oracle_report;
  // Set when the oracle found a feasible decrease and overrode a
  // LocalNonglobal or GlobalCandidate label.
  bool refuted_by_oracle = false;
};

struct KktEnumeration {
  std::vector<KktPoint> points;          // ascending in lambda
  std::vector<double> degenerate_roots;  // original multipliers with A + lambda B singular
};

/// Evaluates every quantity of a KktPoint at a given (x, lambda) in original
/// coordinates. The classification is left at SaddleOrMax; see classify.
[[nodiscard]] KktPoint make_kkt_point(const GtrsInstance& inst,
                                      const Eigen::VectorXd& x, double lambda,
                                      const Tolerances& tol = {});

/// One KKT point per secular root at which A + lambda B is nonsingular:
/// x(lambda) = -(A + lambda B)^{-1}(a + lambda b) is formed coordinate-wise
/// in diagonal form, mapped back and polished by Newton on the bordered KKT
/// system. Roots where a diagonal factor vanishes are listed as degenerate.
[[nodiscard]] KktEnumeration enumerate_kkt(const GtrsInstance& inst,
                                           const CanonicalForm& cf,
                                           const std::vector<SecularRoot>& roots,
                                           const Tolerances& tol = {});

/// Convenience overload: canonicalizes and finds the roots itself. Throws
/// SingularFreeBlock and the canonicalization errors.
[[nodiscard]] KktEnumeration enumerate_kkt(const GtrsInstance& inst,
                                           const Tolerances& tol = {});

/// Fills in certificates and classification. GlobalCandidate: active, A +
/// lambda B PSD and (inequality) lambda >= 0. LocalNonglobal: all five
/// certificates. Otherwise SaddleOrMax.
[[nodiscard]] KktPoint classify(KktPoint pt, Sense sense,
                                const Tolerances& tol = {});

/// True when the point's value exceeds `global_value` by more than
/// 1e-9 (1 + |global_value|).
[[nodiscard]] bool above_global(const KktPoint& pt, double global_value);

/// Checks the count bound min(n1 + 1, n) and pairwise isolation of the
/// LocalNonglobal subset of `points`, returning it. Throws CountBoundViolated.
[[nodiscard]] std::vector<KktPoint> select_local_nonglobal(
    const std::vector<KktPoint>& points, int n1, int n,
    const Tolerances& tol = {});

/// enumerate_kkt, classify and select_local_nonglobal in one call.
[[nodiscard]] std::vector<KktPoint> enumerate_local_nonglobal(
    const GtrsInstance& inst, const Tolerances& tol = {});

}  // namespace gtrs
