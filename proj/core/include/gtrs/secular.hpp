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

#include <vector>

#include "gtrs/canonicalize.hpp"
#include "gtrs/polynomial.hpp"
#include "gtrs/tolerances.hpp"

namespace gtrs {

// One curved-block contribution beta (a + l b)^2 / (alpha + l beta)^2.
struct SecularTerm {
  double beta = 0.0;
  double alpha = 0.0;
  double a_hat = 0.0;
  double b_hat = 0.0;

  // The numerator vanishes identically, so the term contributes nothing and
  // its zero of alpha + l beta is not a true pole.
  [[nodiscard]] bool vanishes() const { return a_hat == 0.0 && b_hat == 0.0; }
  [[nodiscard]] double pole() const { return -alpha / beta; }
};

/// phi(l) = g(x(l)) with x(l) = -(A + lB)^{-1}(a + lb), written in the
/// diagonal coordinates of a CanonicalForm:
///
///   phi(l) = sum_{i<n1} beta_i (a_i + l b_i)^2 / (alpha_i + l beta_i)^2
///            - 2 sum_{i>=n1} b_i (a_i + l b_i) / alpha_i + c
///
/// `numerator` is phi(l) * prod_p (l - p)^2 over the distinct true poles p,
/// a polynomial of degree at most 2*min(n1 + 1, n).
struct SecularFunction {
  int n = 0;
  int n1 = 0;
  std::vector<SecularTerm> quad_terms;
  Polynomial affine_part;
  std::vector<double> poles;         // distinct -alpha_i/beta_i, ascending
  std::vector<double> active_poles;  // subset where the term does not vanish
  Polynomial numerator;

  // prod_p (l - p)^2 over active_poles.
  [[nodiscard]] double denominator(double lambda) const;
  [[nodiscard]] bool identically_zero() const { return numerator.is_zero(); }
  [[nodiscard]] int root_bound() const;  // 2*min(n1 + 1, n)
};

/// Throws SingularFreeBlock when some free coordinate has alpha = 0 with a
/// nonzero linear term.
[[nodiscard]] SecularFunction build_secular(const CanonicalForm& cf,
                                            const Tolerances& tol = {});

/// Term-wise evaluation. Throws PoleEvaluation within 1e-12 of a true pole.
[[nodiscard]] double eval_phi(const SecularFunction& sf, double lambda);
[[nodiscard]] double eval_phi_prime(const SecularFunction& sf, double lambda);
// Sum of absolute values of the terms of phi (resp. phi') at lambda.
[[nodiscard]] double phi_magnitude(const SecularFunction& sf, double lambda);
[[nodiscard]] double phi_prime_magnitude(const SecularFunction& sf,
                                         double lambda);

struct SecularRoot {
  double lambda = 0.0;
  double residual = 0.0;  // |phi(lambda)|
  bool multiple = false;  // phi' vanishes to tolerance
};

struct RootSearchStats {
  int companion_candidates = 0;
  int recovered_by_scan = 0;  // sign changes missed by the companion step
  int rejected = 0;           // candidates failing the residual test
};

/// All real roots of phi, ascending. Candidates come from the companion
/// matrix of the numerator and are polished by safeguarded Newton on phi
/// inside their pole-free interval. Throws CountBoundViolated if more than
/// root_bound() roots survive.
[[nodiscard]] std::vector<SecularRoot> find_real_roots(
    const SecularFunction& sf, const Tolerances& tol = {},
    RootSearchStats* stats = nullptr);

}  // namespace gtrs
