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

#include "gtrs/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gtrs/errors.hpp"

namespace gtrs {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Inertia inertia(const MatrixXd& M, double tol) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M, Eigen::EigenvaluesOnly);
  const VectorXd& ev = es.eigenvalues();
  const double norm = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  Inertia out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= tol * norm) {
      ++out.n_zero;
    } else if (ev[i] > 0) {
      ++out.n_plus;
    } else {
      ++out.n_minus;
    }
  }
  return out;
}

double min_eigenvalue(const MatrixXd& M) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

std::optional<MultiplierInterval> psd_interval(const CanonicalForm& cf,
                                               Sense sense,
                                               const Tolerances& tol) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double scale = cf.alpha.cwiseAbs().maxCoeff() + cf.beta.cwiseAbs().maxCoeff();
  for (int i = cf.n1; i < cf.n(); ++i)
    if (cf.alpha[i] < -tol.inertia * scale) return std::nullopt;

  MultiplierInterval iv{-inf, inf};
  for (int i = 0; i < cf.n1; ++i) {
    const double breakpoint = -cf.alpha[i] / cf.beta[i];
    if (cf.beta[i] > 0) {
      iv.lo = std::max(iv.lo, breakpoint);
    } else {
      iv.hi = std::min(iv.hi, breakpoint);
    }
  }
  if (sense == Sense::Inequality) iv.lo = std::max(iv.lo, 0.0);
  if (iv.lo > iv.hi) return std::nullopt;
  return iv;
}

double tangent_min_curvature(const MatrixXd& G, const VectorXd& grad_g) {
  const auto n = grad_g.size();
  if (grad_g.norm() == 0.0) {
    throw ZeroGradient("constraint gradient vanishes; LICQ fails");
  }
  if (n == 1) return std::numeric_limits<double>::infinity();
  // The Householder reflector mapping grad_g to a multiple of e1 has the
  // remaining n-1 columns as an orthonormal basis of grad_g's complement.
  Eigen::HouseholderQR<MatrixXd> qr(grad_g);
  const MatrixXd Q = qr.householderQ() * MatrixXd::Identity(n, n);
  const MatrixXd Z = Q.rightCols(n - 1);
  const MatrixXd reduced = Z.transpose() * G * Z;
  return min_eigenvalue(0.5 * (reduced + reduced.transpose()));
}

}  // namespace gtrs
