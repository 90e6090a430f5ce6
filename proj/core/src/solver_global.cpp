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

#include "gtrs/solver_global.hpp"

#include <cmath>
#include <limits>

#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

using Eigen::VectorXd;

double diag_scale(const CanonicalForm& cf, double lambda_hat) {
  return cf.alpha.cwiseAbs().maxCoeff() +
         std::abs(lambda_hat) * cf.beta.cwiseAbs().maxCoeff();
}

// Certifies a canonical candidate in original coordinates. Returns nullopt if
// any of the global optimality conditions fails at tolerance.
std::optional<GlobalResult> certify(const GtrsInstance& inst,
                                    const CanonicalForm& cf,
                                    const VectorXd& x_hat, double lambda_hat,
                                    GlobalStatus status,
                                    const Tolerances& tol) {
  const auto [x, lambda] = map_back(cf, x_hat, lambda_hat);
  GlobalResult r;
  r.status = status;
  r.lambda = lambda;
  r.value = eval_objective(inst, x);
  r.constraint_value = eval_constraint(inst, x);
  r.kkt_residual = kkt_residual(inst, x, lambda).norm();
  r.min_eigenvalue = min_eigenvalue(inst.A() + lambda * inst.B());
  const double mscale = inst.matrix_scale() * (1.0 + std::abs(lambda));

  if (r.kkt_residual > tol.kkt_residual * kkt_scale(inst, x, lambda)) return std::nullopt;
  if (r.min_eigenvalue < -tol.kkt_residual * mscale) return std::nullopt;
  const double gtol = tol.feasibility * constraint_scale(inst, x);
  if (status == GlobalStatus::InteriorOptimal) {
    if (!(r.constraint_value < 0.0) || lambda != 0.0) return std::nullopt;
  } else if (inst.sense() == Sense::Inequality && lambda == 0.0) {
    if (r.constraint_value > gtol) return std::nullopt;
  } else if (std::abs(r.constraint_value) > gtol) {
    return std::nullopt;
  }
  if (inst.sense() == Sense::Inequality && lambda < 0.0) return std::nullopt;
  r.x = x;
  return r;
}

}  // namespace

std::string_view to_string(GlobalStatus status) {
  switch (status) {
    case GlobalStatus::Optimal: return "Optimal";
    case GlobalStatus::InteriorOptimal: return "InteriorOptimal";
    case GlobalStatus::HardCase: return "HardCase";
    case GlobalStatus::HardCaseIncomplete: return "HardCaseIncomplete";
    case GlobalStatus::NoPsdCertificate: return "NoPsdCertificate";
  }
  return "unknown";
}

VectorXd canonical_stationary_point(const CanonicalForm& cf, double lambda_hat) {
  const int n = cf.n();
  const double sing = 1e-12 * diag_scale(cf, lambda_hat);
  VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    const double d = cf.alpha[i] + lambda_hat * cf.beta[i];
    x[i] = std::abs(d) <= sing ? 0.0 : -(cf.a_hat[i] + lambda_hat * cf.b_hat[i]) / d;
  }
  return x;
}

GlobalResult solve_global(const GtrsInstance& inst, const Tolerances& tol) {
  const CanonicalForm cf = reduce_to_standard_form(inst, tol);
  std::vector<SecularRoot> roots;
  try {
    roots = find_real_roots(build_secular(cf, tol), tol);
  } catch (const SingularFreeBlock&) {
    // No secular function; only the lambda = 0 and hard-case routes remain.
  }
  return solve_global(inst, cf, roots, tol);
}

GlobalResult solve_global(const GtrsInstance& inst, const CanonicalForm& cf,
                          const std::vector<SecularRoot>& roots,
                          const Tolerances& tol) {
  const int n = cf.n();
  const auto interval = psd_interval(cf, inst.sense(), tol);
  if (!interval) {
    GlobalResult r;
    r.status = GlobalStatus::NoPsdCertificate;
    r.note = "A + lambda B is PSD for no admissible lambda";
    return r;
  }
  const MultiplierInterval original{interval->lo / cf.sigma, interval->hi / cf.sigma};
  auto finish = [&](GlobalResult r) {
    r.psd_interval = original;
    return r;
  };

  // (i) Unconstrained minimizer, feasible with lambda = 0.
  if (inst.sense() == Sense::Inequality && interval->contains(0.0)) {
    const double sing = tol.singular * diag_scale(cf, 0.0);
    bool bounded = true;
    VectorXd x0(n);
    for (int i = 0; i < n; ++i) {
      if (std::abs(cf.alpha[i]) > sing) {
        x0[i] = -cf.a_hat[i] / cf.alpha[i];
      } else if (std::abs(cf.a_hat[i]) <= sing) {
        x0[i] = 0.0;
      } else {
        bounded = false;
      }
    }
    if (bounded) {
      const double g0 = canonical_constraint(cf, x0);
      const auto status = g0 < -tol.feasibility ? GlobalStatus::InteriorOptimal
                                                : GlobalStatus::Optimal;
      if (g0 <= tol.feasibility) {
        if (auto r = certify(inst, cf, x0, 0.0, status, tol)) return finish(*r);
      }
    }
  }

  // (ii) Secular roots inside the PSD interval; each one is a global
  // minimizer once certified, so keep the best value among them.
  std::optional<GlobalResult> best;
  for (const SecularRoot& root : roots) {
    const double l = root.lambda;
    if (!interval->contains(l, 1e-10 * (1.0 + std::abs(l)))) continue;
    const VectorXd xh = canonical_stationary_point(cf, l);
    if (auto r = certify(inst, cf, xh, l, GlobalStatus::Optimal, tol)) {
      if (!best || r->value < best->value) best = r;
    }
  }
  if (best) return finish(*best);

  // (iii) Hard case at a finite singular endpoint of the interval.
  bool attempted = false;
  const double endpoints[] = {interval->lo, interval->hi};
  for (double e : endpoints) {
    if (!std::isfinite(e)) continue;
    const double sing = tol.singular * (1.0 + diag_scale(cf, e));
    std::vector<int> null_idx;
    bool solvable = true;
    for (int i = 0; i < n; ++i) {
      if (std::abs(cf.alpha[i] + e * cf.beta[i]) <= sing) {
        null_idx.push_back(i);
        if (std::abs(cf.a_hat[i] + e * cf.b_hat[i]) > sing) solvable = false;
      }
    }
    if (null_idx.empty() || !solvable) continue;
    attempted = true;
    const VectorXd xp = canonical_stationary_point(cf, e);
    const double gp = canonical_constraint(cf, xp);
    if (inst.sense() == Sense::Inequality && e == 0.0 && gp <= 0.0) {
      const auto status = gp < -tol.feasibility ? GlobalStatus::InteriorOptimal
                                                : GlobalStatus::Optimal;
      if (auto r = certify(inst, cf, xp, 0.0, status, tol)) return finish(*r);
    }
    for (int j : null_idx) {
      // g(xp + tau e_j) = gp + 2 tau b_j + tau^2 beta_j, with xp_j = 0.
      const double bj = cf.b_hat[j];
      const double betaj = cf.beta[j];
      std::optional<double> tau;
      if (betaj != 0.0) {
        const double disc = bj * bj - betaj * gp;
        if (disc >= 0.0) {
          const double sq = std::sqrt(disc);
          const double t1 = (-bj + sq) / betaj;
          const double t2 = (-bj - sq) / betaj;
          if (std::abs(t1) < std::abs(t2)) {
            tau = t1;
          } else if (std::abs(t2) < std::abs(t1)) {
            tau = t2;
          } else {
            tau = std::max(t1, t2);
          }
        }
      } else if (bj != 0.0) {
        tau = -gp / (2.0 * bj);
      }
      if (!tau) continue;
      VectorXd xh = xp;
      xh[j] += *tau;
      if (auto r = certify(inst, cf, xh, e, GlobalStatus::HardCase, tol)) {
        r->null_direction = VectorXd(cf.T.col(j).normalized());
        return finish(*r);
      }
    }
  }

  GlobalResult r;
  if (attempted) {
    r.status = GlobalStatus::HardCaseIncomplete;
    r.note = "singular PSD endpoint, but no null-space completion satisfies the constraint";
  } else {
    r.status = GlobalStatus::NoPsdCertificate;
    r.note = "no secular root or hard-case completion certifies a global minimizer";
  }
  return finish(r);
}

}  // namespace gtrs
