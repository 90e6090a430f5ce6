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

#include "gtrs/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

using nlohmann::json;

json vec_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

// JSON has no infinities; they are written as strings.
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json inertia_json(const Inertia& in) {
  return json::array({in.n_plus, in.n_zero, in.n_minus});
}

json point_json(const KktPoint& p) {
  const Certificates& c = p.certificates;
  json j{{"x", vec_json(p.x)},
         {"lambda", p.lambda},
         {"value", p.value},
         {"constraint_value", p.constraint_value},
         {"kkt_residual", p.kkt_residual},
         {"inertia", inertia_json(p.inertia_G)},
         {"phi_prime", num(p.phi_prime)},
         {"tangent_curvature", num(p.tangent_curv)},
         {"classification", std::string(to_string(p.classification))},
         {"certificates",
          {{"active", c.active},
           {"strict_complementarity", c.strict_complementarity},
           {"one_negative", c.one_negative},
           {"phi_prime_positive", c.phi_prime_positive},
           {"second_order_positive", c.second_order_positive}}},
         {"borderline", p.borderline}};
  if (p.oracle_report) {
    j["oracle"] = {{"passed", p.oracle_report->passed},
                   {"samples", p.oracle_report->samples},
                   {"projection_failures", p.oracle_report->projection_failures},
                   {"worst_violation", p.oracle_report->worst_violation}};
    j["refuted_by_oracle"] = p.refuted_by_oracle;
  }
  return j;
}

json global_json(const GlobalResult& g) {
  json j{{"status", std::string(to_string(g.status))}};
  if (g.x) {
    j["x"] = vec_json(*g.x);
    j["lambda"] = g.lambda;
    j["value"] = g.value;
    j["kkt_residual"] = g.kkt_residual;
    j["constraint_value"] = g.constraint_value;
    j["min_eigenvalue"] = g.min_eigenvalue;
  }
  if (g.null_direction) j["null_direction"] = vec_json(*g.null_direction);
  if (g.psd_interval)
    j["psd_interval"] = json::array({num(g.psd_interval->lo), num(g.psd_interval->hi)});
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

std::string fmt_vec(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt::format("{:.10g}", v[i]);
  }
  return s + ")";
}

}  // namespace

SolveReport solve(const GtrsInstance& inst, const SolveOptions& opts) {
  const Tolerances& tol = opts.tol;
  SolveReport rep;
  rep.n = inst.n();
  rep.sense = inst.sense();
  Diagnostics& dg = rep.diagnostics;
  dg.tolerances = tol;

  const CanonicalForm cf = reduce_to_standard_form(inst, tol);
  dg.path = cf.path;
  dg.definite_pencil_verified = cf.definite_pencil_verified();
  dg.combination = cf.combination;
  dg.n1 = cf.n1;
  dg.n2 = cf.n2;
  dg.sigma = cf.sigma;
  dg.c_hat = cf.c_hat;

  std::vector<SecularRoot> roots;
  try {
    const SecularFunction sf = build_secular(cf, tol);
    roots = find_real_roots(sf, tol, &dg.root_stats);
  } catch (const SingularFreeBlock& e) {
    dg.enumeration_skipped = true;
    dg.skip_reason = e.what();
  }
  for (const SecularRoot& r : roots)
    dg.roots.push_back({r.lambda / cf.sigma, r.residual, r.multiple});

  rep.global = solve_global(inst, cf, roots, tol);

  KktEnumeration e = enumerate_kkt(inst, cf, roots, tol);
  rep.degenerate_roots = e.degenerate_roots;
  const bool run_oracle = opts.run_oracle_on_unverified && !dg.definite_pencil_verified;
  if (!dg.definite_pencil_verified) {
    dg.notes.emplace_back(
        "definite_pencil_unverified: no definite combination of A and B; "
        "certificates corroborated by the neighborhood oracle");
  }
  for (KktPoint& p : e.points) {
    p = classify(std::move(p), inst.sense(), tol);
    if (run_oracle && p.classification != Classification::SaddleOrMax) {
      p.oracle_report = oracle::neighborhood_test(inst, p.x, 1e-3, 1000, opts.seed);
      if (!p.oracle_report->passed) {
        p.refuted_by_oracle = true;
        p.classification = Classification::SaddleOrMax;
        dg.notes.push_back(fmt::format(
            "KKT point at lambda = {:.10g} refuted by the neighborhood oracle", p.lambda));
      }
    }
  }
  rep.local_nonglobal = select_local_nonglobal(e.points, cf.n1, cf.n(), tol);
  if (rep.global.has_minimizer()) {
    for (const KktPoint& p : rep.local_nonglobal) {
      if (!above_global(p, rep.global.value)) {
        dg.notes.push_back(fmt::format(
            "local nonglobal minimizer at lambda = {:.10g} does not exceed the global value",
            p.lambda));
      }
    }
  }
  rep.kkt_points = std::move(e.points);

  if (const auto& co = inst.complex_origin(); co && rep.global.x) {
    const int m = co->n;
    const Eigen::VectorXd& x = *rep.global.x;
    Eigen::VectorXcd z(m);
    for (int i = 0; i < m; ++i) z[i] = {x[i], x[m + i]};
    rep.z_global = z;
  }
  return rep;
}

std::string to_json(const SolveReport& rep) {
  const Diagnostics& dg = rep.diagnostics;
  json kkt = json::array();
  for (const auto& p : rep.kkt_points) kkt.push_back(point_json(p));
  json loc = json::array();
  for (const auto& p : rep.local_nonglobal) loc.push_back(point_json(p));
  json roots = json::array();
  for (const auto& r : dg.roots)
    roots.push_back({{"lambda", r.lambda}, {"residual", r.residual}, {"multiple", r.multiple}});

  json diag{{"path", std::string(to_string(dg.path))},
            {"definite_pencil_verified", dg.definite_pencil_verified},
            {"n1", dg.n1},
            {"n2", dg.n2},
            {"sigma", dg.sigma},
            {"c_hat", dg.c_hat},
            {"secular_roots", roots},
            {"root_search",
             {{"companion_candidates", dg.root_stats.companion_candidates},
              {"recovered_by_scan", dg.root_stats.recovered_by_scan},
              {"rejected", dg.root_stats.rejected}}},
            {"enumeration_skipped", dg.enumeration_skipped},
            {"tolerances",
             {{"feasibility", dg.tolerances.feasibility},
              {"kkt_residual", dg.tolerances.kkt_residual},
              {"curvature", dg.tolerances.curvature},
              {"phi_prime", dg.tolerances.phi_prime},
              {"inertia", dg.tolerances.inertia},
              {"definiteness", dg.tolerances.definiteness},
              {"singular", dg.tolerances.singular}}},
            {"notes", dg.notes}};
  if (dg.combination) {
    diag["definite_combination"] = {{"mu1", dg.combination->mu1},
                                    {"mu2", dg.combination->mu2},
                                    {"witness_mineig", dg.combination->witness_mineig}};
  }
  if (dg.enumeration_skipped) diag["skip_reason"] = dg.skip_reason;

  json doc{{"n", rep.n},
           {"sense", std::string(to_string(rep.sense))},
           {"global", global_json(rep.global)},
           {"kkt_points", kkt},
           {"local_nonglobal", loc},
           {"degenerate_roots", rep.degenerate_roots},
           {"diagnostics", diag}};
  if (rep.z_global) {
    json zr = json::array();
    json zi = json::array();
    for (Eigen::Index i = 0; i < rep.z_global->size(); ++i) {
      zr.push_back((*rep.z_global)[i].real());
      zi.push_back((*rep.z_global)[i].imag());
    }
    doc["global"]["z_re"] = zr;
    doc["global"]["z_im"] = zi;
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const SolveReport& rep) {
  const Diagnostics& dg = rep.diagnostics;
  std::string s;
  s += fmt::format("instance: n = {}, sense = {}, n1 = {}, path = {}{}\n", rep.n,
                   to_string(rep.sense), dg.n1, to_string(dg.path),
                   dg.definite_pencil_verified ? "" : " (definite_pencil_unverified)");
  const GlobalResult& g = rep.global;
  s += fmt::format("global: {}\n", to_string(g.status));
  if (g.x) {
    s += fmt::format("  x = {}\n  lambda = {:.12g}\n  f = {:.12g}\n", fmt_vec(*g.x),
                     g.lambda, g.value);
  }
  if (rep.z_global) {
    std::string z = "(";
    for (Eigen::Index i = 0; i < rep.z_global->size(); ++i) {
      const auto v = (*rep.z_global)[i];
      if (i) z += ", ";
      z += fmt::format("{:.10g}{:+.10g}i", v.real(), v.imag());
    }
    s += "  z = " + z + ")\n";
  }
  if (g.null_direction) s += fmt::format("  null direction = {}\n", fmt_vec(*g.null_direction));
  if (!g.note.empty()) s += "  note: " + g.note + "\n";
  if (dg.enumeration_skipped) s += "enumeration skipped: " + dg.skip_reason + "\n";
  s += fmt::format("kkt points: {}\n", rep.kkt_points.size());
  for (const KktPoint& p : rep.kkt_points) {
    const Certificates& c = p.certificates;
    s += fmt::format(
        "  [{}] lambda = {:.12g}, f = {:.12g}, x = {}\n"
        "      inertia = ({}, {}, {}), phi' = {:.6g}, tangent curvature = {:.6g}\n"
        "      active={} complementarity={} one_negative={} phi_prime_positive={} "
        "second_order={}{}\n",
        to_string(p.classification), p.lambda, p.value, fmt_vec(p.x), p.inertia_G.n_plus,
        p.inertia_G.n_zero, p.inertia_G.n_minus, p.phi_prime, p.tangent_curv, c.active,
        c.strict_complementarity, c.one_negative, c.phi_prime_positive,
        c.second_order_positive, p.borderline ? " borderline" : "");
    if (p.oracle_report) {
      s += fmt::format("      oracle: {} ({} samples, worst {:.3g})\n",
                       p.oracle_report->passed ? "passed" : "failed",
                       p.oracle_report->samples, p.oracle_report->worst_violation);
    }
  }
  s += fmt::format("local nonglobal minimizers: {}\n", rep.local_nonglobal.size());
  for (const KktPoint& p : rep.local_nonglobal) {
    s += fmt::format("  x = {}, lambda = {:.12g}, f = {:.12g}\n", fmt_vec(p.x), p.lambda,
                     p.value);
  }
  if (!rep.degenerate_roots.empty()) {
    s += "degenerate roots:";
    for (double l : rep.degenerate_roots) s += fmt::format(" {:.12g}", l);
    s += "\n";
  }
  for (const auto& note : dg.notes) s += "note: " + note + "\n";
  return s;
}

}  // namespace gtrs
