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

namespace gtrs {

enum class Sense { Inequality, Equality };

[[nodiscard]] std::string_view to_string(Sense sense);

// Hermitian source data of a complex instance, stored as real and imaginary
// parts. A_re and B_re are symmetric, A_im and B_im skew-symmetric.
struct ComplexGtrsInstance {
  int n = 0;
  Eigen::MatrixXd A_re, A_im, B_re, B_im;
  Eigen::VectorXd a_re, a_im, b_re, b_im;
  double c = 0.0;
  Sense sense = Sense::Inequality;
};

/// Generalized trust-region subproblem
///
///     min  f(x) = x'Ax + 2a'x
///     s.t. g(x) = x'Bx + 2b'x + c  <= 0   (Sense::Inequality)
///                                   = 0   (Sense::Equality)
///
/// Linear terms carry the factor 2. Instances are immutable once created and
/// can be shared freely between concurrent solves.
class GtrsInstance {
 public:
  /// Validates dimensions, symmetrizes A and B as (M + M')/2 and rejects a
  /// zero constraint Hessian. Asymmetry above `symmetry_tol` (relative to the
  /// matrix magnitude) appends a message to `warnings` when provided.
  static GtrsInstance create(Eigen::MatrixXd A, Eigen::VectorXd a,
                             Eigen::MatrixXd B, Eigen::VectorXd b, double c,
                             Sense sense,
                             std::vector<std::string>* warnings = nullptr,
                             double symmetry_tol = 1e-12);

  [[nodiscard]] int n() const { return static_cast<int>(a_.size()); }
  [[nodiscard]] const Eigen::MatrixXd& A() const { return A_; }
  [[nodiscard]] const Eigen::VectorXd& a() const { return a_; }
  [[nodiscard]] const Eigen::MatrixXd& B() const { return B_; }
  [[nodiscard]] const Eigen::VectorXd& b() const { return b_; }
  [[nodiscard]] double c() const { return c_; }
  [[nodiscard]] Sense sense() const { return sense_; }

  [[nodiscard]] const std::optional<ComplexGtrsInstance>& complex_origin()
      const {
    return complex_origin_;
  }
  [[nodiscard]] GtrsInstance with_complex_origin(
      ComplexGtrsInstance origin) const;
  [[nodiscard]] GtrsInstance with_sense(Sense sense) const;

  // Magnitude used to make tolerances relative: ||A|| + ||B|| (Frobenius).
  [[nodiscard]] double matrix_scale() const;

 private:
  GtrsInstance() = default;

  Eigen::MatrixXd A_, B_;
  Eigen::VectorXd a_, b_;
  double c_ = 0.0;
  Sense sense_ = Sense::Inequality;
  std::optional<ComplexGtrsInstance> complex_origin_;
};

// f(x) = x'Ax + 2a'x. Throws DimensionMismatch.
[[nodiscard]] double eval_objective(const GtrsInstance& inst,
                                    const Eigen::VectorXd& x);
// g(x) = x'Bx + 2b'x + c. Throws DimensionMismatch.
[[nodiscard]] double eval_constraint(const GtrsInstance& inst,
                                     const Eigen::VectorXd& x);
// grad g(x) = 2(Bx + b).
[[nodiscard]] Eigen::VectorXd constraint_gradient(const GtrsInstance& inst,
                                                  const Eigen::VectorXd& x);

// Magnitude of the terms of g at x, used for scale-relative feasibility.
[[nodiscard]] double constraint_scale(const GtrsInstance& inst,
                                      const Eigen::VectorXd& x);
// Magnitude of the terms of the stationarity residual (A+lB)x + a + lb.
[[nodiscard]] double kkt_scale(const GtrsInstance& inst,
                               const Eigen::VectorXd& x, double lambda);
[[nodiscard]] Eigen::VectorXd kkt_residual(const GtrsInstance& inst,
                                           const Eigen::VectorXd& x,
                                           double lambda);

/// Reads an instance document (JSON). A document carrying only a `complex`
/// block is embedded into its real 2n-dimensional form, with the source data
/// kept in complex_origin(). Throws ParseError, DimensionMismatch,
/// LinearConstraint, NotHermitian.
[[nodiscard]] GtrsInstance parse_instance(
    std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Reads the `complex` block of an instance document.
[[nodiscard]] ComplexGtrsInstance parse_complex_instance(std::string_view text);

/// Writes an instance document. Doubles are emitted in shortest round-trip
/// form, so parse_instance(serialize_instance(x)) reproduces x bit for bit.
[[nodiscard]] std::string serialize_instance(const GtrsInstance& inst);
[[nodiscard]] std::string serialize_complex_instance(
    const ComplexGtrsInstance& inst);

}  // namespace gtrs
