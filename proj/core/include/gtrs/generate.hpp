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

#include <cstdint>
#include <string_view>

#include "gtrs/instance.hpp"

namespace gtrs {

enum class Regime {
  // alpha, beta with mu1 alpha + mu2 beta > 0 by construction, conjugated
  // by a random orthogonal matrix.
  DefinitePencil,
  // Independent random diagonals; no definite combination is guaranteed.
  DiagonalOnly,
  // Hermitian pair sharing a random unitary eigenbasis (definite pencil).
  Complex,
};

[[nodiscard]] std::string_view to_string(Regime regime);
// Throws ParseError on an unknown name.
[[nodiscard]] Regime parse_regime(std::string_view name);

struct RandomSpec {
  int n = 3;   // complex dimension for Regime::Complex
  int n1 = 3;  // 1 <= n1 <= n nonzero constraint curvatures
  Sense sense = Sense::Inequality;
  std::uint64_t seed = 42;
  Regime regime = Regime::DefinitePencil;
};

/// Real instance for DefinitePencil and DiagonalOnly; the embedding of
/// random_complex_instance for Complex. Throws DimensionMismatch on an
/// invalid spec.
[[nodiscard]] GtrsInstance random_instance(const RandomSpec& spec);

[[nodiscard]] ComplexGtrsInstance random_complex_instance(const RandomSpec& spec);

}  // namespace gtrs
