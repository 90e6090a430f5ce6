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

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtrs/canonicalize.hpp"
#include "gtrs/instance.hpp"
#include "gtrs/oracle.hpp"
#include "gtrs/secular.hpp"
#include "gtrs/solver_global.hpp"
#include "gtrs/solver_local.hpp"
#include "gtrs/tolerances.hpp"

namespace gtrs {

struct SolveOptions {
  Tolerances tol;
  // Without a verified definite combination the sufficiency certificates
  // are not backed by theory, so the sampling oracle double-checks them.
  bool run_oracle_on_unverified = true;
  std::uint64_t seed = oracle::kDefaultSeed;
};

struct Diagnostics {
  DiagonalizationPath path = DiagonalizationPath::AlreadyDiagonal;
  bool definite_pencil_verified = false;
  std::optional<DefiniteCombination> combination;
  int n1 = 0;
  int n2 = 0;
  double sigma = 1.0;
  double c_hat = 0.0;
  std::vector<SecularRoot> roots;  // original multipliers
  RootSearchStats root_stats;
  // Set when a free coordinate makes the stationarity system singular; the
  // secular function does not exist and no KKT point is enumerated.
  bool enumeration_skipped = false;
  std::string skip_reason;
  Tolerances tolerances;
  std::vector<std::string> notes;
};

struct SolveReport {
  int n = 0;
  Sense sense = Sense::Inequality;
  GlobalResult global;
  std::vector<KktPoint> kkt_points;       // every enumerated KKT point
  std::vector<KktPoint> local_nonglobal;  // certified subset
  std::vector<double> degenerate_roots;
  Diagnostics diagnostics;
  // Complex instances: the global minimizer z = x_top + i x_bottom.
  std::optional<Eigen::VectorXcd> z_global;
};

/// Full pipeline: canonicalize, find secular roots, solve globally,
/// enumerate and classify every KKT point. Throws NotSD, CountBoundViolated
/// and the instance errors.
[[nodiscard]] SolveReport solve(const GtrsInstance& inst,
                                const SolveOptions& opts = {});

[[nodiscard]] std::string to_json(const SolveReport& report);
[[nodiscard]] std::string to_text(const SolveReport& report);

}  // namespace gtrs
