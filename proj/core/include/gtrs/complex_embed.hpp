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
#include <vector>

#include "gtrs/instance.hpp"
#include "gtrs/report.hpp"

namespace gtrs {

/// Real form of a complex instance in w = (Re z, Im z):
///
///   A' = [[Re A, -Im A], [Im A, Re A]],  a' = (Re a, Im a)
///
/// and likewise for B, b. Then z^H A z + 2 Re(a^H z) = w'A'w + 2a''w.
/// Throws NotHermitian or DimensionMismatch.
[[nodiscard]] GtrsInstance embed(const ComplexGtrsInstance& cinst);

// Hermitian matrix with the given parts, embedded into 2n x 2n real form.
[[nodiscard]] Eigen::MatrixXd embed_matrix(const Eigen::MatrixXd& re,
                                           const Eigen::MatrixXd& im);

struct PairingResult {
  bool ok = true;
  std::optional<double> offending_lambda;
  double worst_gap = 0.0;  // largest relative gap within a pair
};

/// Sorted eigenvalues of H(l) = A' + l B' must come in equal pairs within
/// 1e-7 ||H(l)||; each complex eigenvalue of A + l B appears twice.
[[nodiscard]] PairingResult check_eigenvalue_pairing(
    const ComplexGtrsInstance& cinst, const std::vector<double>& lambdas);

/// Same check on already embedded (possibly corrupted) real matrices.
[[nodiscard]] PairingResult check_eigenvalue_pairing(
    const Eigen::MatrixXd& A_embedded, const Eigen::MatrixXd& B_embedded,
    const std::vector<double>& lambdas);

/// Solves the embedded instance and maps the global minimizer back to z.
/// Throws PairingViolation when the pairing check fails at a KKT multiplier
/// or sample, or when a local nonglobal minimizer is certified.
[[nodiscard]] SolveReport solve_complex(const ComplexGtrsInstance& cinst,
                                        const SolveOptions& opts = {});

}  // namespace gtrs
