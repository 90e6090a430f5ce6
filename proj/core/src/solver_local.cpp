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

#include "gtrs/solver_local.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gtrs/errors.hpp"
#include "gtrs/solver_global.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kRefineSteps = 3;

double relative_residual(const GtrsInstance& inst, const VectorXd& x,
                         double lambda) {
  return kkt_residual(inst, x, lambda).norm() / kkt_scale(inst, x, lambda) +
         std::abs(eval_constraint(inst, x)) / constraint_scale(inst, x);
}

// Newton on F(x, l) = ((A + lB)x + a + lb, g(x)); a step is kept only if it
// lowers the scaled residual.
void refine(const GtrsInstance& inst, VectorXd& x, double& lambda) {
  const int n = inst.n();
  double res = relative_residual(inst, x, lambda);
  for (int it = 0; it < kRefineSteps && res > 0.0; ++it) {
    const VectorXd d = inst.B() * x + inst.b();
    MatrixXd J(n + 1, n + 1);
    J.topLeftCorner(n, n) = inst.A() + lambda * inst.B();
    J.topRightCorner(n, 1) = d;
    J.bottomLeftCorner(1, n) = 2.0 * d.transpose();
    J(n, n) = 0.0;
    VectorXd F(n + 1);
    F.head(n) = kkt_residual(inst, x, lambda);
    F[n] = eval_constraint(inst, x);
    const Eigen::FullPivLU<MatrixXd> lu(J);
    if (!lu.isInvertible()) return;
    const VectorXd step = lu.solve(F);
    const VectorXd x_new = x - step.head(n);
    const double l_new = lambda - step[n];
    const double res_new = relative_residual(inst, x_new, l_new);
    if (!(res_new < res)) return;
    x = x_new;
    lambda = l_new;
    res = res_new;
  }
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::GlobalCandidate: return "GlobalCandidate";
    case Classification::LocalNonglobal: return "LocalNonglobal";
    case Classification::SaddleOrMax: return "SaddleOrMax";
  }
  return "unknown";
}

KktPoint make_kkt_point(const GtrsInstance& inst, const VectorXd& x,
                        double lambda, const Tolerances& tol) {
  KktPoint pt;
  pt.x = x;
  pt.lambda = lambda;
  pt.value = eval_objective(inst, x);
  pt.constraint_value = eval_constraint(inst, x);
  pt.kkt_residual = kkt_residual(inst, x, lambda).norm();
  pt.constraint_scale = constraint_scale(inst, x);

  const MatrixXd G = inst.A() + lambda * inst.B();
  const Eigen::SelfAdjointEigenSolver<MatrixXd> es(G);
  const VectorXd& ev = es.eigenvalues();
  pt.G_norm = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= tol.inertia * pt.G_norm) {
      ++pt.inertia_G.n_zero;
    } else if (ev[i] > 0) {
      ++pt.inertia_G.n_plus;
    } else {
      ++pt.inertia_G.n_minus;
    }
  }

  const VectorXd d = inst.B() * x + inst.b();
  if (pt.inertia_G.n_zero == 0) {
    const VectorXd w = es.eigenvectors().transpose() * d;
    pt.phi_prime = -2.0 * (w.array().square() / ev.array()).sum();
    pt.phi_prime_scale = 2.0 * (w.array().square() / ev.array().abs()).sum();
  } else {
    pt.phi_prime = std::numeric_limits<double>::quiet_NaN();
    pt.phi_prime_scale = std::numeric_limits<double>::infinity();
  }
  try {
    pt.tangent_curv = tangent_min_curvature(G, d);
  } catch (const ZeroGradient&) {
    pt.tangent_curv = std::numeric_limits<double>::quiet_NaN();
  }
  return pt;
}

KktEnumeration enumerate_kkt(const GtrsInstance& inst, const CanonicalForm& cf,
                             const std::vector<SecularRoot>& roots,
                             const Tolerances& tol) {
  KktEnumeration out;
  const double amax = cf.alpha.cwiseAbs().maxCoeff();
  const double bmax = cf.beta.size() ? cf.beta.cwiseAbs().maxCoeff() : 0.0;
  for (const SecularRoot& root : roots) {
    const double l = root.lambda;
    const double sing = tol.singular * (amax + std::abs(l) * bmax);
    bool singular = false;
    for (int i = 0; i < cf.n(); ++i)
      if (std::abs(cf.alpha[i] + l * cf.beta[i]) <= sing) singular = true;
    const OriginalPoint p = map_back(cf, canonical_stationary_point(cf, l), l);
    if (singular) {
      out.degenerate_roots.push_back(p.lambda);
      continue;
    }
    VectorXd x = p.x;
    double lambda = p.lambda;
    refine(inst, x, lambda);
    out.points.push_back(make_kkt_point(inst, x, lambda, tol));
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const KktPoint& u, const KktPoint& v) { return u.lambda < v.lambda; });
  return out;
}

KktEnumeration enumerate_kkt(const GtrsInstance& inst, const Tolerances& tol) {
  const CanonicalForm cf = reduce_to_standard_form(inst, tol);
  const SecularFunction sf = build_secular(cf, tol);
  return enumerate_kkt(inst, cf, find_real_roots(sf, tol), tol);
}

KktPoint classify(KktPoint pt, Sense sense, const Tolerances& tol) {
  Certificates& c = pt.certificates;
  c.active = std::abs(pt.constraint_value) <= tol.feasibility * pt.constraint_scale;
  c.strict_complementarity = sense == Sense::Equality || pt.lambda > tol.multiplier;
  c.one_negative = pt.inertia_G.n_minus == 1 && pt.inertia_G.n_zero == 0;
  c.phi_prime_positive = std::isfinite(pt.phi_prime) &&
                         pt.phi_prime > tol.phi_prime * (1.0 + pt.phi_prime_scale);
  const double curv_tol = tol.curvature * pt.G_norm;
  // n = 1 yields +inf: the tangent space is trivial.
  c.second_order_positive = pt.tangent_curv > curv_tol;
  pt.borderline = std::abs(pt.tangent_curv) <= curv_tol;

  const bool psd = pt.inertia_G.n_minus == 0;
  const bool sign_ok = sense == Sense::Equality || pt.lambda >= -tol.multiplier;
  if (c.active && psd && sign_ok) {
    pt.classification = Classification::GlobalCandidate;
  } else if (c.all()) {
    pt.classification = Classification::LocalNonglobal;
  } else {
    pt.classification = Classification::SaddleOrMax;
  }
  return pt;
}

bool above_global(const KktPoint& pt, double global_value) {
  return pt.value > global_value + 1e-9 * (1.0 + std::abs(global_value));
}

std::vector<KktPoint> select_local_nonglobal(const std::vector<KktPoint>& points,
                                             int n1, int n,
                                             const Tolerances& tol) {
  std::vector<KktPoint> out;
  for (const KktPoint& p : points)
    if (p.classification == Classification::LocalNonglobal) out.push_back(p);
  const int bound = std::min(n1 + 1, n);
  if (static_cast<int>(out.size()) > bound) {
    throw CountBoundViolated(std::to_string(out.size()) +
                             " local nonglobal minimizers exceed the bound " +
                             std::to_string(bound));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if ((out[i].x - out[j].x).norm() <= tol.isolation) {
        throw CountBoundViolated("two local nonglobal minimizers are not isolated");
      }
    }
  }
  return out;
}

std::vector<KktPoint> enumerate_local_nonglobal(const GtrsInstance& inst,
                                                const Tolerances& tol) {
  const CanonicalForm cf = reduce_to_standard_form(inst, tol);
  const SecularFunction sf = build_secular(cf, tol);
  KktEnumeration e = enumerate_kkt(inst, cf, find_real_roots(sf, tol), tol);
  for (KktPoint& p : e.points) p = classify(std::move(p), inst.sense(), tol);
  return select_local_nonglobal(e.points, cf.n1, cf.n(), tol);
}

}  // namespace gtrs
