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

#include "gtrs/generate.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gtrs/complex_embed.hpp"
#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  VectorXd normal_vector(int n) {
    VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }
  MatrixXd orthogonal(int n) {
    MatrixXd G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G(i, j) = normal();
    return Eigen::HouseholderQR<MatrixXd>(G).householderQ() * MatrixXd::Identity(n, n);
  }
  MatrixXcd unitary(int n) {
    MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G(i, j) = {normal(), normal()};
    return Eigen::HouseholderQR<MatrixXcd>(G).householderQ() * MatrixXcd::Identity(n, n);
  }
  // Nonzero constraint curvature with |beta| >= 0.1 and random sign.
  double curvature() {
    const double mag = uniform(0.1, 2.0);
    return uniform(0.0, 1.0) < 0.5 ? -mag : mag;
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

void validate(const RandomSpec& spec) {
  if (spec.n < 1 || spec.n1 < 1 || spec.n1 > spec.n) {
    throw DimensionMismatch("random instance needs 1 <= n1 <= n, got n = " +
                            std::to_string(spec.n) + ", n1 = " + std::to_string(spec.n1));
  }
}

// Diagonals with mu1 alpha + mu2 beta = d > 0 for a random angle whose
// cosine is bounded away from zero.
void definite_diagonals(Sampler& s, int n, int n1, VectorXd& alpha, VectorXd& beta) {
  double theta = 0.0;
  do {
    theta = s.uniform(0.0, 2.0 * std::numbers::pi);
  } while (std::abs(std::cos(theta)) < 0.2);
  const double mu1 = std::cos(theta);
  const double mu2 = std::sin(theta);
  alpha.resize(n);
  beta = VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (i < n1) beta[i] = s.curvature();
    const double d = s.uniform(0.5, 2.0);
    alpha[i] = (d - mu2 * beta[i]) / mu1;
  }
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::DefinitePencil: return "definite";
    case Regime::DiagonalOnly: return "diagonal";
    case Regime::Complex: return "complex";
  }
  return "unknown";
}

Regime parse_regime(std::string_view name) {
  if (name == "definite") return Regime::DefinitePencil;
  if (name == "diagonal") return Regime::DiagonalOnly;
  if (name == "complex") return Regime::Complex;
  throw ParseError("unknown regime '" + std::string(name) +
                   "' (expected definite, diagonal or complex)");
}

GtrsInstance random_instance(const RandomSpec& spec) {
  validate(spec);
  if (spec.regime == Regime::Complex) return embed(random_complex_instance(spec));
  Sampler s(spec.seed);
  const int n = spec.n;
  VectorXd alpha, beta;
  MatrixXd A, B;
  if (spec.regime == Regime::DefinitePencil) {
    definite_diagonals(s, n, spec.n1, alpha, beta);
    const MatrixXd Q = s.orthogonal(n);
    A = Q * alpha.asDiagonal() * Q.transpose();
    B = Q * beta.asDiagonal() * Q.transpose();
  } else {
    alpha = s.normal_vector(n);
    beta = VectorXd::Zero(n);
    for (int i = 0; i < spec.n1; ++i) beta[i] = s.curvature();
    A = alpha.asDiagonal();
    B = beta.asDiagonal();
  }
  const VectorXd a = s.normal_vector(n);
  const VectorXd b = s.normal_vector(n);
  const double c = s.normal();
  return GtrsInstance::create(A, a, B, b, c, spec.sense);
}

ComplexGtrsInstance random_complex_instance(const RandomSpec& spec) {
  validate(spec);
  Sampler s(spec.seed);
  const int n = spec.n;
  VectorXd alpha, beta;
  definite_diagonals(s, n, spec.n1, alpha, beta);
  const MatrixXcd U = s.unitary(n);
  MatrixXcd A = U * alpha.cast<std::complex<double>>().asDiagonal() * U.adjoint();
  MatrixXcd B = U * beta.cast<std::complex<double>>().asDiagonal() * U.adjoint();
  A = 0.5 * (A + A.adjoint()).eval();
  B = 0.5 * (B + B.adjoint()).eval();
  ComplexGtrsInstance ci;
  ci.n = n;
  ci.A_re = A.real();
  ci.A_im = A.imag();
  ci.B_re = B.real();
  ci.B_im = B.imag();
  ci.a_re = s.normal_vector(n);
  ci.a_im = s.normal_vector(n);
  ci.b_re = s.normal_vector(n);
  ci.b_im = s.normal_vector(n);
  ci.c = s.normal();
  ci.sense = spec.sense;
  return ci;
}

}  // namespace gtrs
