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

#include "gtrs/instance.hpp"
#include "gtrs/tolerances.hpp"

namespace gtrs {

// A pair (mu1, mu2) on the unit circle with mu1*A + mu2*B positive definite.
struct DefiniteCombination {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double witness_mineig = 0.0;  // lambda_min(mu1*A + mu2*B)
};

/// Maximizes theta -> lambda_min(cos(theta) A + sin(theta) B) over [0, 2pi)
/// with a 2048-point sweep followed by golden-section refinement. Returns
/// nullopt when the best witness does not exceed tol.definiteness times
/// ||A|| + ||B||.
[[nodiscard]] std::optional<DefiniteCombination> find_definite_combination(
    const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
    const Tolerances& tol = {});

enum class DiagonalizationPath { AlreadyDiagonal, DefinitePencil };

[[nodiscard]] std::string_view to_string(DiagonalizationPath path);

struct Diagonalization {
  Eigen::MatrixXd T;      // congruence: T'AT = Diag(alpha), T'BT = Diag(beta)
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;
  DiagonalizationPath path = DiagonalizationPath::AlreadyDiagonal;
  // Present whenever a definite combination was found, on either path.
  std::optional<DefiniteCombination> combination;
};

/// Congruence-diagonalizes the pair. Diagonal inputs are returned with T = I
/// (no definiteness required); otherwise a definite combination C = LL' is
/// used and T = L^{-T} Q with Q the eigenvectors of the transformed pencil.
/// Throws NotSD when neither pathway applies.
[[nodiscard]] Diagonalization simultaneous_diagonalize(
    const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
    const Tolerances& tol = {});

/// Standard form of an instance: in coordinates x = T*xh + s,
///
///   f(x) = sum_i alpha_i xh_i^2 + 2 a_hat' xh + f_offset
///   g(x) = sigma * (sum_{i<n1} beta_i xh_i^2 + 2 b_hat' xh + c_hat)
///
/// with beta_i != 0 exactly for i < n1, b_hat zero on those coordinates and
/// c_hat in {-1, 0, 1}. Coordinates are ordered by decreasing beta.
struct CanonicalForm {
  Eigen::MatrixXd T;
  Eigen::VectorXd s;
  double sigma = 1.0;
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;   // already divided by sigma
  Eigen::VectorXd a_hat;
  Eigen::VectorXd b_hat;  // full length n; zero on the first n1 entries
  double c_hat = 0.0;
  int n1 = 0;
  int n2 = 0;
  double f_offset = 0.0;
  Sense sense = Sense::Inequality;
  DiagonalizationPath path = DiagonalizationPath::AlreadyDiagonal;
  std::optional<DefiniteCombination> combination;

  [[nodiscard]] int n() const { return static_cast<int>(alpha.size()); }
  // b2 in the block notation: the trailing n2 linear constraint entries.
  [[nodiscard]] Eigen::VectorXd b2() const { return b_hat.tail(n2); }
  [[nodiscard]] bool definite_pencil_verified() const {
    return combination.has_value();
  }
};

[[nodiscard]] CanonicalForm reduce_to_standard_form(const GtrsInstance& inst,
                                                    const Tolerances& tol = {});

// Canonical objective and constraint (without offset / sigma).
[[nodiscard]] double canonical_objective(const CanonicalForm& cf,
                                         const Eigen::VectorXd& xh);
[[nodiscard]] double canonical_constraint(const CanonicalForm& cf,
                                          const Eigen::VectorXd& xh);

struct OriginalPoint {
  Eigen::VectorXd x;
  double lambda = 0.0;
};

/// x = T*xh + s and lambda = lambda_hat / sigma.
[[nodiscard]] OriginalPoint map_back(const CanonicalForm& cf,
                                     const Eigen::VectorXd& x_hat,
                                     double lambda_hat);

/// Inverse of map_back: xh = T^{-1}(x - s), lambda_hat = sigma * lambda.
[[nodiscard]] Eigen::VectorXd to_canonical(const CanonicalForm& cf,
                                           const Eigen::VectorXd& x);

}  // namespace gtrs
