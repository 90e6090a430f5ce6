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

#include <complex>
#include <initializer_list>
#include <vector>

namespace gtrs {

// Dense univariate polynomial with double coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  [[nodiscard]] const std::vector<double>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_zero() const { return degree() < 0; }

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  /// All complex roots, as eigenvalues of the companion matrix.
  [[nodiscard]] std::vector<std::complex<double>> roots() const;

 private:
  void trim();
  std::vector<double> c_;
};

}  // namespace gtrs
