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

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gtrs/gtrs.hpp"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kNotSD = 3, kInternal = 4 };

struct GlobalFlags {
  bool json = false;
  std::optional<double> tol;
  std::uint64_t seed = gtrs::oracle::kDefaultSeed;

  [[nodiscard]] gtrs::Tolerances tolerances() const {
    return tol ? gtrs::Tolerances::uniform(*tol) : gtrs::Tolerances{};
  }
  [[nodiscard]] gtrs::SolveOptions solve_options() const {
    gtrs::SolveOptions o;
    o.tol = tolerances();
    o.seed = seed;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gtrs::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gtrs::GtrsInstance load(const std::string& path) {
  std::vector<std::string> warnings;
  gtrs::GtrsInstance inst = gtrs::parse_instance(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return inst;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json vec_json(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

std::string fmt_vec(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += fmt::format("{}{:.10g}", i ? ", " : "", v[i]);
  return s + ")";
}

int cmd_solve(const GlobalFlags& g, const std::string& path, bool complex) {
  const gtrs::SolveOptions opts = g.solve_options();
  const gtrs::SolveReport rep =
      complex ? gtrs::solve_complex(gtrs::parse_complex_instance(read_file(path)), opts)
              : gtrs::solve(load(path), opts);
  if (g.json) {
    json doc = json::parse(gtrs::to_json(rep));
    doc.erase("kkt_points");
    doc.erase("degenerate_roots");
    doc["local_nonglobal_count"] = doc["local_nonglobal"].size();
    doc.erase("local_nonglobal");
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  const std::string text = gtrs::to_text(rep);
  // The global section ends where the KKT listing starts.
  const auto cut = text.find("kkt points:");
  std::cout << text.substr(0, cut);
  std::cout << "local nonglobal minimizers: " << rep.local_nonglobal.size() << "\n";
  return kOk;
}

int cmd_local(const GlobalFlags& g, const std::string& path) {
  const gtrs::SolveReport rep = gtrs::solve(load(path), g.solve_options());
  std::cout << (g.json ? gtrs::to_json(rep) : gtrs::to_text(rep));
  return kOk;
}

int cmd_verify(const GlobalFlags& g, const std::string& path,
               const std::vector<double>& xs, double lambda) {
  const gtrs::GtrsInstance inst = load(path);
  const gtrs::Tolerances tol = g.tolerances();
  if (static_cast<int>(xs.size()) != inst.n()) {
    throw gtrs::DimensionMismatch(
        fmt::format("--x has {} entries, instance has n = {}", xs.size(), inst.n()));
  }
  gtrs::KktPoint pt = gtrs::classify(gtrs::make_kkt_point(inst, to_vector(xs), lambda, tol),
                                     inst.sense(), tol);
  const bool stationary =
      pt.kkt_residual <= tol.kkt_residual * gtrs::kkt_scale(inst, pt.x, lambda);
  if (!stationary) pt.classification = gtrs::Classification::SaddleOrMax;
  const gtrs::GlobalResult global = gtrs::solve_global(inst, tol);
  const auto report = gtrs::oracle::neighborhood_test(inst, pt.x, 1e-3, 1000, g.seed);
  const gtrs::Certificates& c = pt.certificates;
  if (g.json) {
    json doc{{"x", vec_json(pt.x)},
             {"lambda", pt.lambda},
             {"value", pt.value},
             {"constraint_value", pt.constraint_value},
             {"kkt_residual", pt.kkt_residual},
             {"stationary", stationary},
             {"inertia", {pt.inertia_G.n_plus, pt.inertia_G.n_zero, pt.inertia_G.n_minus}},
             {"phi_prime", std::isfinite(pt.phi_prime) ? json(pt.phi_prime) : json("nan")},
             {"tangent_curvature",
              std::isfinite(pt.tangent_curv) ? json(pt.tangent_curv) : json("inf")},
             {"classification", std::string(gtrs::to_string(pt.classification))},
             {"certificates",
              {{"active", c.active},
               {"strict_complementarity", c.strict_complementarity},
               {"one_negative", c.one_negative},
               {"phi_prime_positive", c.phi_prime_positive},
               {"second_order_positive", c.second_order_positive}}},
             {"global_status", std::string(gtrs::to_string(global.status))},
             {"oracle", {{"passed", report.passed}, {"worst_violation", report.worst_violation}}}};
    if (global.has_minimizer()) doc["above_global"] = gtrs::above_global(pt, global.value);
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::cout << fmt::format("point: x = {}, lambda = {:.12g}, f = {:.12g}, g = {:.3g}\n",
                           fmt_vec(pt.x), pt.lambda, pt.value, pt.constraint_value);
  std::cout << fmt::format("stationary: {} (residual {:.3g})\n", stationary, pt.kkt_residual);
  std::cout << fmt::format("inertia(A + lambda B) = ({}, {}, {})\n", pt.inertia_G.n_plus,
                           pt.inertia_G.n_zero, pt.inertia_G.n_minus);
  std::cout << fmt::format("phi' = {:.6g}, tangent curvature = {:.6g}\n", pt.phi_prime,
                           pt.tangent_curv);
  std::cout << fmt::format(
      "certificates: active={} complementarity={} one_negative={} phi_prime_positive={} "
      "second_order={}\n",
      c.active, c.strict_complementarity, c.one_negative, c.phi_prime_positive,
      c.second_order_positive);
  std::cout << "classification: " << gtrs::to_string(pt.classification) << "\n";
  std::cout << "global: " << gtrs::to_string(global.status);
  if (global.has_minimizer()) std::cout << fmt::format(" (f = {:.12g})", global.value);
  std::cout << "\n";
  std::cout << fmt::format("oracle: {} (worst {:.3g})\n", report.passed ? "passed" : "failed",
                           report.worst_violation);
  return kOk;
}

int cmd_secular(const GlobalFlags& g, const std::string& path,
                const std::vector<double>& sweep) {
  const gtrs::GtrsInstance inst = load(path);
  const gtrs::Tolerances tol = g.tolerances();
  const gtrs::CanonicalForm cf = gtrs::reduce_to_standard_form(inst, tol);
  const gtrs::SecularFunction sf = gtrs::build_secular(cf, tol);
  // Canonical multipliers are sigma times the original ones and the
  // canonical constraint is g / sigma.
  if (!sweep.empty()) {
    const double lo = sweep[0];
    const double hi = sweep[1];
    const int npts = static_cast<int>(sweep[2]);
    if (!(lo < hi) || npts < 2) throw gtrs::ParseError("--sweep needs lo < hi and npts >= 2");
    std::cout << "lambda,phi\n";
    for (int k = 0; k < npts; ++k) {
      const double l = lo + (hi - lo) * k / (npts - 1);
      try {
        std::cout << fmt::format("{:.17g},{:.17g}\n", l, cf.sigma * gtrs::eval_phi(sf, cf.sigma * l));
      } catch (const gtrs::PoleEvaluation&) {
        // Poles are left out of the table.
      }
    }
    return kOk;
  }
  gtrs::RootSearchStats stats;
  const auto roots = gtrs::find_real_roots(sf, tol, &stats);
  if (g.json) {
    json arr = json::array();
    for (const auto& r : roots)
      arr.push_back({{"lambda", r.lambda / cf.sigma}, {"residual", r.residual}, {"multiple", r.multiple}});
    std::vector<double> poles;
    for (double p : sf.active_poles) poles.push_back(p / cf.sigma);
    std::cout << json{{"roots", arr}, {"poles", poles}, {"bound", sf.root_bound()}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << fmt::format("secular roots: {} (bound {})\n", roots.size(), sf.root_bound());
  for (const auto& r : roots) {
    std::cout << fmt::format("  lambda = {:.15g}  residual = {:.3g}{}\n", r.lambda / cf.sigma,
                             r.residual, r.multiple ? "  multiple" : "");
  }
  return kOk;
}

int cmd_oracle(const GlobalFlags& g, const std::string& path, const std::vector<double>& xs,
               double radius, int samples) {
  const gtrs::GtrsInstance inst = load(path);
  if (static_cast<int>(xs.size()) != inst.n()) {
    throw gtrs::DimensionMismatch(
        fmt::format("--x has {} entries, instance has n = {}", xs.size(), inst.n()));
  }
  const auto r = gtrs::oracle::neighborhood_test(inst, to_vector(xs), radius, samples, g.seed);
  if (g.json) {
    std::cout << json{{"passed", r.passed},
                      {"samples", r.samples},
                      {"projection_failures", r.projection_failures},
                      {"worst_violation", r.worst_violation}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << fmt::format("oracle: {} ({} samples, {} projection failures, worst {:.6g})\n",
                             r.passed ? "passed" : "failed", r.samples, r.projection_failures,
                             r.worst_violation);
  }
  return kOk;
}

int cmd_gen(const GlobalFlags& g, gtrs::RandomSpec spec, const std::string& sense,
            const std::string& regime, const std::string& out) {
  spec.seed = g.seed;
  spec.sense = sense == "eq" ? gtrs::Sense::Equality : gtrs::Sense::Inequality;
  spec.regime = gtrs::parse_regime(regime);
  const std::string doc = spec.regime == gtrs::Regime::Complex
                              ? gtrs::serialize_complex_instance(gtrs::random_complex_instance(spec))
                              : gtrs::serialize_instance(gtrs::random_instance(spec));
  if (out.empty() || out == "-") {
    std::cout << doc;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw gtrs::Error("cannot write '" + out + "'");
    f << doc;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized trust-region subproblem solver"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit machine-readable JSON");
  app.add_option("--tol", g.tol, "Override every certificate tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampling and generation");

  std::string path;
  bool complex = false;
  auto* solve = app.add_subcommand("solve", "Global minimizer with optimality certificate");
  solve->add_option("instance", path, "Instance document")->required();
  solve->add_flag("--complex", complex, "Read the complex block and solve via embedding");

  auto* local = app.add_subcommand("local", "All KKT points and local nonglobal minimizers");
  local->add_option("instance", path, "Instance document")->required();

  std::vector<double> xs;
  double lambda = 0.0;
  auto* verify = app.add_subcommand("verify", "Classify a user-supplied KKT pair");
  verify->add_option("instance", path, "Instance document")->required();
  verify->add_option("--x", xs, "Point, comma separated")->required()->delimiter(',');
  verify->add_option("--lambda", lambda, "Multiplier")->required();

  std::vector<double> sweep;
  auto* secular = app.add_subcommand("secular", "Secular roots, or a CSV table with --sweep");
  secular->add_option("instance", path, "Instance document")->required();
  secular->add_option("--sweep", sweep, "lo hi npts")->expected(3);

  double radius = 1e-3;
  int samples = 1000;
  auto* oracle = app.add_subcommand("oracle", "Sampled local-minimality test at a point");
  oracle->add_option("instance", path, "Instance document")->required();
  oracle->add_option("--x", xs, "Point, comma separated")->required()->delimiter(',');
  oracle->add_option("--radius", radius, "Perturbation radius")->check(CLI::PositiveNumber);
  oracle->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);

  gtrs::RandomSpec spec;
  std::string sense = "le";
  std::string regime = "definite";
  std::string out;
  auto* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--n", spec.n, "Dimension")->check(CLI::PositiveNumber);
  gen->add_option("--n1", spec.n1, "Nonzero constraint curvatures")->check(CLI::PositiveNumber);
  gen->add_option("--sense", sense, "le or eq")->check(CLI::IsMember({"le", "eq"}));
  gen->add_option("--regime", regime, "definite, diagonal or complex");
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  for (auto* sub : {solve, local, verify, secular, oracle, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*solve) return cmd_solve(g, path, complex);
    if (*local) return cmd_local(g, path);
    if (*verify) return cmd_verify(g, path, xs, lambda);
    if (*secular) return cmd_secular(g, path, sweep);
    if (*oracle) return cmd_oracle(g, path, xs, radius, samples);
    if (*gen) {
      if (!gen->count("--n1")) spec.n1 = spec.n;
      return cmd_gen(g, spec, sense, regime, out);
    }
  } catch (const gtrs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const gtrs::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const gtrs::NotSD& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotSD;
  } catch (const gtrs::InternalAssertion& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const gtrs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
