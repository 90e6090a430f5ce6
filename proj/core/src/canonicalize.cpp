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

#include "gtrs/canonicalize.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kThetaSamples = 2048;

double min_eigenvalue(const MatrixXd& M) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

bool is_diagonal(const MatrixXd& M, double threshold) {
  for (Eigen::Index c = 0; c < M.cols(); ++c)
    for (Eigen::Index r = 0; r < M.rows(); ++r)
      if (r != c && std::abs(M(r, c)) > threshold) return false;
  return true;
}

// Fixes the sign ambiguity of eigenvectors: the entry of largest magnitude
// (first one on ties) is made positive.
void normalize_signs(MatrixXd& Q) {
  for (Eigen::Index c = 0; c < Q.cols(); ++c) {
    Eigen::Index arg = 0;
    Q.col(c).cwiseAbs().maxCoeff(&arg);
    if (Q(arg, c) < 0) Q.col(c) = -Q.col(c);
  }
}

}  // namespace

std::string_view to_string(DiagonalizationPath path) {
  return path == DiagonalizationPath::AlreadyDiagonal ? "already_diagonal"
                                                      : "definite_pencil";
}

std::optional<DefiniteCombination> find_definite_combination(
    const MatrixXd& A, const MatrixXd& B, const Tolerances& tol) {
  const double scale = A.norm() + B.norm();
  if (scale == 0.0) return std::nullopt;

  auto witness = [&](double theta) {
    return min_eigenvalue(std::cos(theta) * A + std::sin(theta) * B);
  };

  const double step = 2.0 * std::numbers::pi / kThetaSamples;
  double best_theta = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kThetaSamples; ++k) {
    const double theta = k * step;
    const double w = witness(theta);
    if (w > best) {
      best = w;
      best_theta = theta;
    }
  }

  // Golden-section refinement on the bracket around the best sample.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - step;
  double hi = best_theta + step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = witness(x1);
  double f2 = witness(x2);
  while (hi - lo > tol.theta_resolution) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = witness(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = witness(x1);
    }
  }
  if (std::max(f1, f2) > best) {
    best_theta = f1 > f2 ? x1 : x2;
    best = std::max(f1, f2);
  }

  if (!(best > tol.definiteness * scale)) return std::nullopt;
  return DefiniteCombination{std::cos(best_theta), std::sin(best_theta), best};
}

Diagonalization simultaneous_diagonalize(const MatrixXd& A, const MatrixXd& B,
                                         const Tolerances& tol) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
    throw DimensionMismatch("A and B must be square of the same order");
  }
  const auto n = A.rows();
  const double scale = A.norm() + B.norm();
  Diagonalization out;
  out.combination = find_definite_combination(A, B, tol);

  if (is_diagonal(A, 1e-14 * scale) && is_diagonal(B, 1e-14 * scale)) {
    out.T = MatrixXd::Identity(n, n);
    out.alpha = A.diagonal();
    out.beta = B.diagonal();
    out.path = DiagonalizationPath::AlreadyDiagonal;
    return out;
  }
  if (!out.combination) {
    throw NotSD(
        "A and B are not both diagonal and no definite combination "
        "mu1*A + mu2*B > 0 exists");
  }

  const auto [mu1, mu2, mineig] = *out.combination;
  const MatrixXd C = mu1 * A + mu2 * B;
  Eigen::LLT<MatrixXd> llt(C);
  if (llt.info() != Eigen::Success) {
    throw NotSD("definite combination failed to factor");
  }
  const MatrixXd L = llt.matrixL();
  const auto Lt = L.triangularView<Eigen::Lower>();

  // L^{-1} X L^{-T} for whichever of A, B carries the larger weight in the
  // complement of C; its eigenvectors then separate every common eigenspace.
  const MatrixXd& X = std::abs(mu2) >= std::abs(mu1) ? A : B;
  MatrixXd Y = Lt.solve(X);
  MatrixXd M = Lt.solve(Y.transpose());
  M = 0.5 * (M + M.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M);
  MatrixXd Q = es.eigenvectors();
  normalize_signs(Q);

  out.T = L.transpose().triangularView<Eigen::Upper>().solve(Q);
  out.alpha = (out.T.transpose() * A * out.T).diagonal();
  out.beta = (out.T.transpose() * B * out.T).diagonal();
  out.path = DiagonalizationPath::DefinitePencil;
  return out;
}

CanonicalForm reduce_to_standard_form(const GtrsInstance& inst,
                                      const Tolerances& tol) {
  const int n = inst.n();
  Diagonalization d = simultaneous_diagonalize(inst.A(), inst.B(), tol);

  const double beta_max = d.beta.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i)
    if (std::abs(d.beta[i]) <= tol.beta_zero * beta_max) d.beta[i] = 0.0;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    const bool zi = d.beta[i] == 0.0;
    const bool zj = d.beta[j] == 0.0;
    if (zi != zj) return !zi;
    if (zi) return false;
    return d.beta[i] > d.beta[j];
  });

  CanonicalForm cf;
  cf.sense = inst.sense();
  cf.path = d.path;
  cf.combination = d.combination;
  cf.T.resize(n, n);
  cf.alpha.resize(n);
  cf.beta.resize(n);
  for (int k = 0; k < n; ++k) {
    cf.T.col(k) = d.T.col(order[k]);
    cf.alpha[k] = d.alpha[order[k]];
    cf.beta[k] = d.beta[order[k]];
  }
  cf.n1 = static_cast<int>((cf.beta.array() != 0.0).count());
  cf.n2 = n - cf.n1;

  const VectorXd at = cf.T.transpose() * inst.a();
  const VectorXd bt = cf.T.transpose() * inst.b();

  // Complete the square on the curved block.
  VectorXd t = VectorXd::Zero(n);
  double c_shift = inst.c();
  for (int i = 0; i < cf.n1; ++i) {
    t[i] = -bt[i] / cf.beta[i];
    c_shift -= bt[i] * bt[i] / cf.beta[i];
  }
  cf.a_hat = at + cf.alpha.cwiseProduct(t);
  cf.f_offset = 0.0;
  for (int i = 0; i < n; ++i)
    cf.f_offset += cf.alpha[i] * t[i] * t[i] + 2.0 * at[i] * t[i];
  cf.s = cf.T * t;

  if (std::abs(c_shift) > tol.c_zero) {
    cf.sigma = std::abs(c_shift);
    cf.c_hat = c_shift > 0 ? 1.0 : -1.0;
  } else {
    cf.sigma = 1.0;
    cf.c_hat = 0.0;
  }
  cf.beta /= cf.sigma;
  cf.b_hat = VectorXd::Zero(n);
  cf.b_hat.tail(cf.n2) = bt.tail(cf.n2) / cf.sigma;
  return cf;
}

double canonical_objective(const CanonicalForm& cf, const VectorXd& xh) {
  return (cf.alpha.array() * xh.array().square()).sum() +
         2.0 * cf.a_hat.dot(xh);
}

double canonical_constraint(const CanonicalForm& cf, const VectorXd& xh) {
  return (cf.beta.array() * xh.array().square()).sum() +
         2.0 * cf.b_hat.dot(xh) + cf.c_hat;
}

OriginalPoint map_back(const CanonicalForm& cf, const VectorXd& x_hat,
                       double lambda_hat) {
  return {cf.T * x_hat + cf.s, lambda_hat / cf.sigma};
}

VectorXd to_canonical(const CanonicalForm& cf, const VectorXd& x) {
  return cf.T.partialPivLu().solve(x - cf.s);
}

}  // namespace gtrs
