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

#include "gtrs/complex_embed.hpp"

#include <fmt/format.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void check_hermitian(const char* name, const MatrixXd& re, const MatrixXd& im,
                     int n) {
  if (re.rows() != n || re.cols() != n || im.rows() != n || im.cols() != n) {
    throw DimensionMismatch(fmt::format("{} must be {}x{}", name, n, n));
  }
  const double scale = 1.0 + re.norm() + im.norm();
  if ((re - re.transpose()).norm() > 1e-12 * scale ||
      (im + im.transpose()).norm() > 1e-12 * scale) {
    throw NotHermitian(fmt::format("{} is not Hermitian", name));
  }
}

void check_vec(const char* name, const VectorXd& v, int n) {
  if (v.size() != n) throw DimensionMismatch(fmt::format("{} must have length {}", name, n));
}

VectorXd stack(const VectorXd& top, const VectorXd& bottom) {
  VectorXd v(top.size() + bottom.size());
  v << top, bottom;
  return v;
}

// Sample multipliers used besides the KKT ones.
std::vector<double> default_samples() {
  std::vector<double> s;
  for (int k = 0; k <= 20; ++k) s.push_back(-10.0 + k);
  return s;
}

}  // namespace

MatrixXd embed_matrix(const MatrixXd& re, const MatrixXd& im) {
  const auto n = re.rows();
  MatrixXd M(2 * n, 2 * n);
  M << re, -im, im, re;
  return M;
}

GtrsInstance embed(const ComplexGtrsInstance& ci) {
  const int n = ci.n;
  if (n < 1) throw DimensionMismatch("complex dimension must be positive");
  check_hermitian("A", ci.A_re, ci.A_im, n);
  check_hermitian("B", ci.B_re, ci.B_im, n);
  check_vec("a_re", ci.a_re, n);
  check_vec("a_im", ci.a_im, n);
  check_vec("b_re", ci.b_re, n);
  check_vec("b_im", ci.b_im, n);
  return GtrsInstance::create(embed_matrix(ci.A_re, ci.A_im), stack(ci.a_re, ci.a_im),
                              embed_matrix(ci.B_re, ci.B_im), stack(ci.b_re, ci.b_im),
                              ci.c, ci.sense)
      .with_complex_origin(ci);
}

PairingResult check_eigenvalue_pairing(const MatrixXd& A, const MatrixXd& B,
                                       const std::vector<double>& lambdas) {
  PairingResult res;
  for (double l : lambdas) {
    const MatrixXd H = A + l * B;
    const Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (H + H.transpose()),
                                                     Eigen::EigenvaluesOnly);
    const VectorXd& ev = es.eigenvalues();
    const double norm = ev.cwiseAbs().maxCoeff();
    const double tol = 1e-7 * norm;
    bool ok = ev.size() % 2 == 0;
    for (Eigen::Index i = 0; ok && i + 1 < ev.size(); i += 2) {
      const double gap = ev[i + 1] - ev[i];
      if (norm > 0.0) res.worst_gap = std::max(res.worst_gap, gap / norm);
      if (gap > tol) ok = false;
    }
    if (!ok && res.ok) {
      res.ok = false;
      res.offending_lambda = l;
    }
  }
  return res;
}

PairingResult check_eigenvalue_pairing(const ComplexGtrsInstance& ci,
                                       const std::vector<double>& lambdas) {
  return check_eigenvalue_pairing(embed_matrix(ci.A_re, ci.A_im),
                                  embed_matrix(ci.B_re, ci.B_im), lambdas);
}

SolveReport solve_complex(const ComplexGtrsInstance& ci, const SolveOptions& opts) {
  const GtrsInstance inst = embed(ci);
  SolveReport rep = solve(inst, opts);

  std::vector<double> lambdas = default_samples();
  for (const SecularRoot& r : rep.diagnostics.roots) lambdas.push_back(r.lambda);
  const PairingResult pr = check_eigenvalue_pairing(ci, lambdas);
  if (!pr.ok) {
    throw PairingViolation(fmt::format(
        "eigenvalues of the embedded pencil do not pair at lambda = {:.12g}",
        *pr.offending_lambda));
  }
  if (!rep.local_nonglobal.empty()) {
    throw PairingViolation(fmt::format(
        "{} local nonglobal minimizers certified for a complex instance, whose "
        "embedded pencil has only even eigenvalue multiplicities",
        rep.local_nonglobal.size()));
  }
  return rep;
}

}  // namespace gtrs
