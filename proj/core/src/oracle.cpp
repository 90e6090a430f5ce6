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

#include "gtrs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "gtrs/errors.hpp"

namespace gtrs::oracle {
namespace {

using Eigen::VectorXd;

constexpr int kProjectionSteps = 20;

// Newton steps along grad g towards g = 0.
bool project_to_boundary(const GtrsInstance& inst, VectorXd& x) {
  for (int k = 0; k < kProjectionSteps; ++k) {
    const double g = eval_constraint(inst, x);
    if (std::abs(g) <= 1e-13 * constraint_scale(inst, x)) return true;
    const VectorXd grad = constraint_gradient(inst, x);
    const double gg = grad.squaredNorm();
    if (gg == 0.0 || !std::isfinite(gg)) return false;
    x -= (g / gg) * grad;
  }
  return std::abs(eval_constraint(inst, x)) <= 1e-10 * constraint_scale(inst, x);
}

Polynomial poly_pow(const Polynomial& p, int k) {
  Polynomial out{1.0};
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

}  // namespace

NeighborhoodReport neighborhood_test(const GtrsInstance& inst,
                                     const VectorXd& x, double radius,
                                     int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const double f0 = eval_objective(inst, x);
  NeighborhoodReport rep;
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    VectorXd d(inst.n());
    for (int i = 0; i < inst.n(); ++i) d[i] = normal(rng);
    const double nd = d.norm();
    if (nd == 0.0) continue;
    VectorXd y = x + (radius / nd) * d;
    const bool feasible =
        inst.sense() == Sense::Inequality && eval_constraint(inst, y) <= 0.0;
    if (!feasible && !project_to_boundary(inst, y)) {
      ++rep.projection_failures;
      continue;
    }
    ++rep.samples;
    worst = std::min(worst, eval_objective(inst, y) - f0);
  }
  rep.worst_violation = rep.samples > 0 ? worst : 0.0;
  rep.passed = rep.worst_violation >= -1e-9 * (1.0 + std::abs(f0));
  return rep;
}

std::vector<double> isolate_real_roots(const Polynomial& p) {
  const int deg = p.degree();
  if (deg < 1) return {};
  const auto& c = p.coeffs();
  if (deg == 1) return {-c[0] / c[1]};

  double bound = 0.0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(c[k] / c[deg]));
  bound += 1.0;

  std::vector<double> knots{-bound};
  for (double r : isolate_real_roots(p.derivative()))
    if (r > -bound && r < bound) knots.push_back(r);
  knots.push_back(bound);
  std::sort(knots.begin(), knots.end());

  double mag = 0.0;
  for (double v : c) mag = std::max(mag, std::abs(v));

  std::vector<double> roots;
  auto add = [&](double r) {
    if (roots.empty() || std::abs(r - roots.back()) > 1e-10 * (1.0 + std::abs(r)))
      roots.push_back(r);
  };
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    double lo = knots[k];
    double hi = knots[k + 1];
    double flo = p(lo);
    const double fhi = p(hi);
    if (k > 0 && std::abs(flo) <= 1e-12 * mag * std::pow(1.0 + std::abs(lo), deg)) {
      add(lo);  // even-order root at a critical point
      continue;
    }
    if (flo == 0.0) {
      add(lo);
      continue;
    }
    if ((flo < 0) == (fhi < 0)) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = p(mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    add(0.5 * (lo + hi));
  }
  return roots;
}

UnivariateReduction univariate_reduce_2d(const GtrsInstance& inst) {
  if (inst.n() != 2 || inst.sense() != Sense::Equality) {
    throw NotReducible("univariate reduction needs a 2-dimensional equality instance");
  }
  const auto& A = inst.A();
  const auto& B = inst.B();
  const auto& a = inst.a();
  const auto& b = inst.b();
  const double c = inst.c();
  const double eps = 1e-14 * B.norm();
  const bool b11 = std::abs(B(0, 0)) > eps;
  const bool b22 = std::abs(B(1, 1)) > eps;
  const bool b12 = std::abs(B(0, 1)) > eps;

  UnivariateReduction red;
  // x(t) as (numerator polynomials over a common power of t) is handled per
  // case below; each case fills critical polynomial and point evaluator.
  std::vector<double> ts;
  std::function<VectorXd(double)> curve;
  std::function<double(double)> second;

  if (!b11 && !b22 && b12 && b.norm() == 0.0) {
    const double k = -c / (2.0 * B(0, 1));
    if (k == 0.0) throw NotReducible("x1 x2 = 0 is a pair of lines");
    red.kind = ReductionKind::Hyperbola;
    red.critical = Polynomial{-A(1, 1) * k * k, -a[1] * k, 0.0, a[0], A(0, 0)};
    for (double t : isolate_real_roots(red.critical))
      if (std::abs(t) > 1e-12) ts.push_back(t);
    curve = [k](double t) { return VectorXd{{t, k / t}}; };
    second = [&, k](double t) {
      return 2.0 * A(0, 0) + 6.0 * A(1, 1) * k * k / std::pow(t, 4) +
             4.0 * a[1] * k / std::pow(t, 3);
    };
  } else if (!b12 && (b11 != b22)) {
    // One diagonal entry vanishes; solve the linear variable.
    const int q = b11 ? 0 : 1;  // quadratic variable
    const int l = 1 - q;        // linear variable
    if (std::abs(b[l]) <= eps) {
      throw NotReducible("constraint does not determine the linear variable");
    }
    red.kind = q == 0 ? ReductionKind::ParabolaX2 : ReductionKind::ParabolaX1;
    // x_l = p(t) = -(B_qq t^2 + 2 b_q t + c) / (2 b_l), x_q = t.
    const Polynomial p =
        Polynomial{-c, -2.0 * b[q], -B(q, q)} * (1.0 / (2.0 * b[l]));
    const Polynomial t{0.0, 1.0};
    const Polynomial F = t * t * A(q, q) + t * p * (2.0 * A(q, l)) +
                         poly_pow(p, 2) * A(l, l) + t * (2.0 * a[q]) +
                         p * (2.0 * a[l]);
    red.critical = F.derivative();
    ts = isolate_real_roots(red.critical);
    const Polynomial F2 = red.critical.derivative();
    curve = [p, q, l](double tv) {
      VectorXd x(2);
      x[q] = tv;
      x[l] = p(tv);
      return x;
    };
    second = [F2](double tv) { return F2(tv); };
  } else {
    throw NotReducible("constraint is not of the form x1 x2 = k or an axis-aligned parabola");
  }

  for (double t : ts) {
    UnivariateCriticalPoint cp;
    cp.t = t;
    cp.x = curve(t);
    cp.second_derivative = second(t);
    cp.is_local_min = cp.second_derivative > 0.0;
    cp.value = eval_objective(inst, cp.x);
    red.points.push_back(std::move(cp));
  }
  return red;
}

std::vector<Bracket> phi_sweep(const SecularFunction& sf, double lo, double hi,
                               int npts) {
  std::vector<Bracket> out;
  if (!(lo < hi) || npts < 2) return out;
  const auto& P = sf.active_poles;
  auto near_pole = [&](double x) {
    return std::any_of(P.begin(), P.end(), [&](double p) {
      return std::abs(x - p) <= 1e-6 * (1.0 + std::abs(p));
    });
  };
  bool have_prev = false;
  double prev_x = 0.0;
  double prev_f = 0.0;
  const double h = (hi - lo) / (npts - 1);
  for (int k = 0; k < npts; ++k) {
    const double x = lo + k * h;
    if (near_pole(x)) continue;
    double f;
    try {
      f = eval_phi(sf, x);
    } catch (const PoleEvaluation&) {
      continue;
    }
    if (have_prev && (f < 0) != (prev_f < 0)) {
      const bool crosses_pole = std::any_of(P.begin(), P.end(), [&](double p) {
        return p > prev_x && p < x;
      });
      if (!crosses_pole) out.push_back({prev_x, x});
    }
    have_prev = true;
    prev_x = x;
    prev_f = f;
  }
  return out;
}

}  // namespace gtrs::oracle
