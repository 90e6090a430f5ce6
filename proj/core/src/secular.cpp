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

#include "gtrs/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPoleGuard = 1e-12;
constexpr double kPoleClusterTol = 1e-12;
constexpr int kNewtonIterations = 30;
constexpr int kScanSamples = 32;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Sorted distinct values, merging entries within kPoleClusterTol (relative).
std::vector<double> cluster(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double p : v) {
    if (!out.empty() && std::abs(p - out.back()) <= kPoleClusterTol * (1.0 + std::abs(p)))
      continue;
    out.push_back(p);
  }
  return out;
}

Polynomial square_factor(double p) { return Polynomial{p * p, -2.0 * p, 1.0}; }

struct Interval {
  double lo;
  double hi;
  [[nodiscard]] bool contains(double x) const { return lo < x && x < hi; }
};

Interval enclosing_interval(const std::vector<double>& poles, double x) {
  auto it = std::upper_bound(poles.begin(), poles.end(), x);
  const double hi = it == poles.end() ? kInf : *it;
  const double lo = it == poles.begin() ? -kInf : *std::prev(it);
  return {lo, hi};
}

bool near_pole(const std::vector<double>& poles, double x, double rel) {
  return std::any_of(poles.begin(), poles.end(), [&](double p) {
    return std::abs(x - p) <= rel * (1.0 + std::abs(p));
  });
}

// Maps t in (0, 1) into the open interval, clustering toward finite ends.
double map_into(const Interval& iv, double t) {
  if (std::isfinite(iv.lo) && std::isfinite(iv.hi)) return iv.lo + (iv.hi - iv.lo) * t;
  if (std::isfinite(iv.lo)) {
    const double w = std::max(1.0, std::abs(iv.lo));
    return iv.lo + w * t / (1.0 - t);
  }
  if (std::isfinite(iv.hi)) {
    const double w = std::max(1.0, std::abs(iv.hi));
    return iv.hi - w * (1.0 - t) / t;
  }
  return std::tan(std::numbers::pi * (t - 0.5));
}

std::optional<double> try_phi(const SecularFunction& sf, double x) {
  try {
    const double v = eval_phi(sf, x);
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const PoleEvaluation&) {
    return std::nullopt;
  }
}

double bisect(const SecularFunction& sf, double a, double b, double fa) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const auto fm = try_phi(sf, m);
    if (!fm) break;
    if (*fm == 0.0) return m;
    if ((*fm < 0) == (fa < 0)) {
      a = m;
      fa = *fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Looks for a sign change of phi around x, expanding outward inside iv.
std::optional<double> bracket_and_bisect(const SecularFunction& sf, double x,
                                         const Interval& iv) {
  const auto fx = try_phi(sf, x);
  if (!fx) return std::nullopt;
  double h = 1e-8 * (1.0 + std::abs(x));
  for (int k = 0; k < 200; ++k, h *= 2.0) {
    const double left = x - h;
    const double right = x + h;
    const bool left_ok = iv.contains(left);
    const bool right_ok = iv.contains(right);
    if (!left_ok && !right_ok) break;
    if (left_ok) {
      if (const auto fl = try_phi(sf, left); fl && (*fl < 0) != (*fx < 0))
        return bisect(sf, left, x, *fl);
    }
    if (right_ok) {
      if (const auto fr = try_phi(sf, right); fr && (*fr < 0) != (*fx < 0))
        return bisect(sf, x, right, *fx);
    }
  }
  return std::nullopt;
}

// Safeguarded Newton on phi, confined to the pole-free interval iv.
std::optional<double> polish(const SecularFunction& sf, double x0,
                             const Interval& iv) {
  double x = x0;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const auto f = try_phi(sf, x);
    if (!f) return bracket_and_bisect(sf, x0, iv);
    if (*f == 0.0) return x;
    const double fp = eval_phi_prime(sf, x);
    if (fp == 0.0 || !std::isfinite(fp)) return bracket_and_bisect(sf, x, iv);
    const double next = x - *f / fp;
    if (!iv.contains(next)) return bracket_and_bisect(sf, x, iv);
    if (std::abs(next - x) <= 4.0 * kEps * (1.0 + std::abs(x))) return next;
    x = next;
  }
  return x;
}

}  // namespace

double SecularFunction::denominator(double lambda) const {
  double d = 1.0;
  for (double p : active_poles) d *= (lambda - p) * (lambda - p);
  return d;
}

int SecularFunction::root_bound() const { return 2 * std::min(n1 + 1, n); }

SecularFunction build_secular(const CanonicalForm& cf, const Tolerances& tol) {
  SecularFunction sf;
  sf.n = cf.n();
  sf.n1 = cf.n1;
  sf.affine_part = Polynomial{cf.c_hat};

  std::vector<double> all_poles;
  std::vector<double> live_poles;
  for (int i = 0; i < cf.n1; ++i) {
    SecularTerm t{cf.beta[i], cf.alpha[i], cf.a_hat[i], cf.b_hat[i]};
    sf.quad_terms.push_back(t);
    all_poles.push_back(t.pole());
    if (!t.vanishes()) live_poles.push_back(t.pole());
  }

  const double free_tol =
      tol.singular * (cf.alpha.cwiseAbs().maxCoeff() + cf.beta.cwiseAbs().maxCoeff());
  for (int i = cf.n1; i < cf.n(); ++i) {
    const double a = cf.a_hat[i];
    const double b = cf.b_hat[i];
    if (a == 0.0 && b == 0.0) continue;
    if (std::abs(cf.alpha[i]) <= free_tol) {
      throw SingularFreeBlock("free coordinate " + std::to_string(i) +
                              " has zero objective curvature but a nonzero "
                              "linear term; x(lambda) is undefined");
    }
    const double alpha = cf.alpha[i];
    sf.affine_part += Polynomial{-2.0 * b * a / alpha, -2.0 * b * b / alpha};
  }

  sf.poles = cluster(std::move(all_poles));
  sf.active_poles = cluster(std::move(live_poles));

  // Group the curved terms by their (clustered) pole and expand
  //   N = sum_k W_k prod_{j != k} (l - p_j)^2 + affine * prod_j (l - p_j)^2
  // with W_k(l) = sum_{i in k} (a_i + l b_i)^2 / beta_i.
  const auto& P = sf.active_poles;
  std::vector<Polynomial> weights(P.size());
  for (const SecularTerm& t : sf.quad_terms) {
    if (t.vanishes()) continue;
    const double p = t.pole();
    std::size_t k = 0;
    double best = kInf;
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (std::abs(P[j] - p) < best) {
        best = std::abs(P[j] - p);
        k = j;
      }
    }
    weights[k] += Polynomial{t.a_hat * t.a_hat, 2.0 * t.a_hat * t.b_hat,
                             t.b_hat * t.b_hat} *
                  (1.0 / t.beta);
  }
  Polynomial numerator = sf.affine_part;
  for (double p : P) numerator = numerator * square_factor(p);
  for (std::size_t k = 0; k < P.size(); ++k) {
    Polynomial term = weights[k];
    for (std::size_t j = 0; j < P.size(); ++j)
      if (j != k) term = term * square_factor(P[j]);
    numerator += term;
  }
  sf.numerator = std::move(numerator);
  return sf;
}

double eval_phi(const SecularFunction& sf, double lambda) {
  double acc = sf.affine_part(lambda);
  for (const SecularTerm& t : sf.quad_terms) {
    if (t.vanishes()) continue;
    const double v = t.alpha + lambda * t.beta;
    if (std::abs(v) <= kPoleGuard * (std::abs(t.alpha) + std::abs(lambda * t.beta))) {
      throw PoleEvaluation("phi evaluated at a pole (lambda = " +
                           std::to_string(lambda) + ")");
    }
    const double u = t.a_hat + lambda * t.b_hat;
    acc += t.beta * (u / v) * (u / v);
  }
  return acc;
}

double eval_phi_prime(const SecularFunction& sf, double lambda) {
  double acc = sf.affine_part.derivative()(lambda);
  for (const SecularTerm& t : sf.quad_terms) {
    if (t.vanishes()) continue;
    const double v = t.alpha + lambda * t.beta;
    if (std::abs(v) <= kPoleGuard * (std::abs(t.alpha) + std::abs(lambda * t.beta))) {
      throw PoleEvaluation("phi' evaluated at a pole (lambda = " +
                           std::to_string(lambda) + ")");
    }
    const double u = t.a_hat + lambda * t.b_hat;
    // d/dl [beta u^2 / v^2] = 2 beta u (b v - u beta) / v^3
    acc += 2.0 * t.beta * (u / v) * (t.b_hat * v - u * t.beta) / (v * v);
  }
  return acc;
}

double phi_magnitude(const SecularFunction& sf, double lambda) {
  double acc = 0.0;
  const auto& c = sf.affine_part.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    acc += std::abs(c[k]) * std::pow(std::abs(lambda), static_cast<double>(k));
  for (const SecularTerm& t : sf.quad_terms) {
    if (t.vanishes()) continue;
    const double u = t.a_hat + lambda * t.b_hat;
    const double v = t.alpha + lambda * t.beta;
    acc += std::abs(t.beta) * (u / v) * (u / v);
  }
  return acc;
}

double phi_prime_magnitude(const SecularFunction& sf, double lambda) {
  double acc = 0.0;
  const auto& c = sf.affine_part.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k)
    acc += static_cast<double>(k) * std::abs(c[k]) *
           std::pow(std::abs(lambda), static_cast<double>(k - 1));
  for (const SecularTerm& t : sf.quad_terms) {
    if (t.vanishes()) continue;
    const double u = t.a_hat + lambda * t.b_hat;
    const double v = t.alpha + lambda * t.beta;
    acc += 2.0 * std::abs(t.beta * (u / v)) *
           (std::abs(t.b_hat * v) + std::abs(u * t.beta)) / (v * v);
  }
  return acc;
}

std::vector<SecularRoot> find_real_roots(const SecularFunction& sf,
                                         const Tolerances& tol,
                                         RootSearchStats* stats) {
  RootSearchStats local_stats;
  RootSearchStats& st = stats ? *stats : local_stats;
  st = {};
  if (sf.identically_zero()) return {};

  const auto& P = sf.active_poles;
  auto accept = [&](double x) {
    const auto f = try_phi(sf, x);
    return f && std::abs(*f) <= tol.feasibility * (1.0 + phi_magnitude(sf, x));
  };

  // Companion candidates in the scaled variable mu = l / s, s a power of two
  // near the pole magnitude so that coefficient scaling is exact.
  double pole_mag = 1.0;
  for (double p : P) pole_mag = std::max(pole_mag, std::abs(p));
  const double s = std::exp2(std::round(std::log2(pole_mag)));
  std::vector<double> scaled = sf.numerator.coeffs();
  double sk = 1.0;
  for (double& c : scaled) {
    c *= sk;
    sk *= s;
  }

  std::vector<double> found;
  for (const auto& z : Polynomial(std::move(scaled)).roots()) {
    const double rel = std::abs(z.imag()) / (1.0 + std::abs(z.real()));
    if (rel > 1e-4) continue;
    ++st.companion_candidates;
    const double x0 = s * z.real();
    const Interval iv = enclosing_interval(P, x0);
    const auto x = polish(sf, x0, iv);
    if (x && accept(*x)) {
      found.push_back(*x);
    } else if (rel <= 1e-8) {
      ++st.rejected;
    }
  }

  // Sign-change scan of every pole-free interval, as a safety net for roots
  // the companion step lost to cancellation in the expanded numerator.
  std::vector<double> edges;
  edges.push_back(-kInf);
  edges.insert(edges.end(), P.begin(), P.end());
  edges.push_back(kInf);
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const Interval iv{edges[k], edges[k + 1]};
    double prev_x = 0.0;
    std::optional<double> prev_f;
    for (int j = 0; j < kScanSamples; ++j) {
      const double t = 0.5 * (1.0 - std::cos(std::numbers::pi * (j + 0.5) / kScanSamples));
      const double x = map_into(iv, t);
      const auto f = iv.contains(x) ? try_phi(sf, x) : std::nullopt;
      if (!f) continue;
      if (prev_f && (*prev_f < 0) != (*f < 0)) {
        const bool covered = std::any_of(found.begin(), found.end(), [&](double r) {
          return r >= prev_x && r <= x;
        });
        if (!covered) {
          const double r = bisect(sf, prev_x, x, *prev_f);
          if (accept(r)) {
            found.push_back(r);
            ++st.recovered_by_scan;
          }
        }
      }
      prev_x = x;
      prev_f = f;
    }
  }

  std::sort(found.begin(), found.end());
  std::vector<SecularRoot> roots;
  for (double x : found) {
    if (near_pole(P, x, tol.root_merge)) continue;
    const double residual = std::abs(eval_phi(sf, x));
    if (!roots.empty() &&
        std::abs(x - roots.back().lambda) <= tol.root_merge * (1.0 + std::abs(x))) {
      if (residual < roots.back().residual) roots.back() = {x, residual, false};
      continue;
    }
    roots.push_back({x, residual, false});
  }
  for (SecularRoot& r : roots) {
    const double slope = std::abs(eval_phi_prime(sf, r.lambda));
    r.multiple = slope <= tol.phi_prime * (1.0 + phi_prime_magnitude(sf, r.lambda));
  }
  if (static_cast<int>(roots.size()) > sf.root_bound()) {
    throw CountBoundViolated("secular function has " + std::to_string(roots.size()) +
                             " real roots, above the bound " +
                             std::to_string(sf.root_bound()));
  }
  return roots;
}

}  // namespace gtrs
