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

#include "gtrs/instance.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>
#include <utility>

#include "gtrs/complex_embed.hpp"
#include "gtrs/errors.hpp"

namespace gtrs {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;

MatrixXd symmetrize(const MatrixXd& M, std::string_view name, double tol,
                    std::vector<std::string>* warnings) {
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  const double mag = std::max(1.0, M.cwiseAbs().maxCoeff());
  if (asym > tol * mag && warnings != nullptr) {
    std::ostringstream msg;
    msg << "matrix " << name << " is not symmetric (max |M - M'| = " << asym
        << "); using (M + M')/2";
    warnings->push_back(msg.str());
  }
  return 0.5 * (M + M.transpose());
}

Sense parse_sense(const json& j) {
  if (!j.is_string()) throw ParseError("field 'sense' must be \"le\" or \"eq\"");
  const auto s = j.get<std::string>();
  if (s == "le") return Sense::Inequality;
  if (s == "eq") return Sense::Equality;
  throw ParseError("field 'sense' must be \"le\" or \"eq\", got \"" + s + "\"");
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double read_number(const json& j, const char* key) {
  if (!j.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return j.get<double>();
}

VectorXd read_vector(const json& j, const char* key, int n) {
  if (!j.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  if (static_cast<int>(j.size()) != n) {
    throw DimensionMismatch(std::string("field '") + key + "' has " +
                            std::to_string(j.size()) + " entries, expected " +
                            std::to_string(n));
  }
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = read_number(j[i], key);
  return v;
}

// Accepts either nested rows or a flat row-major list of n*n numbers.
MatrixXd read_matrix(const json& j, const char* key, int n) {
  if (!j.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  MatrixXd M(n, n);
  if (!j.empty() && j[0].is_array()) {
    if (static_cast<int>(j.size()) != n) {
      throw DimensionMismatch(std::string("matrix '") + key + "' has " +
                              std::to_string(j.size()) + " rows, expected " +
                              std::to_string(n));
    }
    for (int r = 0; r < n; ++r) {
      const json& row = j[r];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw DimensionMismatch(std::string("matrix '") + key + "' row " +
                                std::to_string(r) + " is not of length " +
                                std::to_string(n));
      }
      for (int c = 0; c < n; ++c) M(r, c) = read_number(row[c], key);
    }
    return M;
  }
  if (static_cast<int>(j.size()) != n * n) {
    throw DimensionMismatch(std::string("matrix '") + key + "' has " +
                            std::to_string(j.size()) + " entries, expected " +
                            std::to_string(n * n));
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) M(r, c) = read_number(j[r * n + c], key);
  return M;
}

int read_dimension(const json& doc) {
  const json& jn = field(doc, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw ParseError("field 'n' must be a positive integer");
  }
  return static_cast<int>(jn.get<long long>());
}

json write_matrix(const MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json write_vector(const VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("instance document must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
}

ComplexGtrsInstance read_complex_block(const json& blk) {
  if (!blk.is_object()) throw ParseError("field 'complex' must be an object");
  ComplexGtrsInstance ci;
  ci.n = read_dimension(blk);
  ci.A_re = read_matrix(field(blk, "A_re"), "A_re", ci.n);
  ci.A_im = read_matrix(field(blk, "A_im"), "A_im", ci.n);
  ci.B_re = read_matrix(field(blk, "B_re"), "B_re", ci.n);
  ci.B_im = read_matrix(field(blk, "B_im"), "B_im", ci.n);
  ci.a_re = read_vector(field(blk, "a_re"), "a_re", ci.n);
  ci.a_im = read_vector(field(blk, "a_im"), "a_im", ci.n);
  ci.b_re = read_vector(field(blk, "b_re"), "b_re", ci.n);
  ci.b_im = read_vector(field(blk, "b_im"), "b_im", ci.n);
  ci.c = read_number(field(blk, "c"), "c");
  ci.sense = parse_sense(field(blk, "sense"));
  return ci;
}

json write_complex_block(const ComplexGtrsInstance& ci) {
  json blk;
  blk["n"] = ci.n;
  blk["A_re"] = write_matrix(ci.A_re);
  blk["A_im"] = write_matrix(ci.A_im);
  blk["B_re"] = write_matrix(ci.B_re);
  blk["B_im"] = write_matrix(ci.B_im);
  blk["a_re"] = write_vector(ci.a_re);
  blk["a_im"] = write_vector(ci.a_im);
  blk["b_re"] = write_vector(ci.b_re);
  blk["b_im"] = write_vector(ci.b_im);
  blk["c"] = ci.c;
  blk["sense"] = ci.sense == Sense::Equality ? "eq" : "le";
  return blk;
}

void check_dim(const GtrsInstance& inst, const VectorXd& x) {
  if (x.size() != inst.n()) {
    throw DimensionMismatch("point has dimension " + std::to_string(x.size()) +
                            ", instance has n = " + std::to_string(inst.n()));
  }
}

}  // namespace

std::string_view to_string(Sense sense) {
  return sense == Sense::Equality ? "eq" : "le";
}

GtrsInstance GtrsInstance::create(MatrixXd A, VectorXd a, MatrixXd B,
                                  VectorXd b, double c, Sense sense,
                                  std::vector<std::string>* warnings,
                                  double symmetry_tol) {
  const auto n = a.size();
  if (n < 1) throw DimensionMismatch("instance dimension must be positive");
  if (A.rows() != n || A.cols() != n) {
    throw DimensionMismatch("A must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  if (B.rows() != n || B.cols() != n) {
    throw DimensionMismatch("B must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  if (b.size() != n) throw DimensionMismatch("b must have length " + std::to_string(n));
  if (!A.allFinite() || !B.allFinite() || !a.allFinite() || !b.allFinite() ||
      !std::isfinite(c)) {
    throw ParseError("instance data must be finite");
  }
  GtrsInstance inst;
  inst.A_ = symmetrize(A, "A", symmetry_tol, warnings);
  inst.B_ = symmetrize(B, "B", symmetry_tol, warnings);
  if (inst.B_.isZero(0.0)) {
    throw LinearConstraint("constraint Hessian B is zero; g must be quadratic");
  }
  inst.a_ = std::move(a);
  inst.b_ = std::move(b);
  inst.c_ = c;
  inst.sense_ = sense;
  return inst;
}

GtrsInstance GtrsInstance::with_complex_origin(ComplexGtrsInstance origin) const {
  GtrsInstance out = *this;
  out.complex_origin_ = std::move(origin);
  return out;
}

GtrsInstance GtrsInstance::with_sense(Sense sense) const {
  GtrsInstance out = *this;
  out.sense_ = sense;
  if (out.complex_origin_) out.complex_origin_->sense = sense;
  return out;
}

double GtrsInstance::matrix_scale() const { return A_.norm() + B_.norm(); }

double eval_objective(const GtrsInstance& inst, const VectorXd& x) {
  check_dim(inst, x);
  return x.dot(inst.A() * x) + 2.0 * inst.a().dot(x);
}

double eval_constraint(const GtrsInstance& inst, const VectorXd& x) {
  check_dim(inst, x);
  return x.dot(inst.B() * x) + 2.0 * inst.b().dot(x) + inst.c();
}

VectorXd constraint_gradient(const GtrsInstance& inst, const VectorXd& x) {
  check_dim(inst, x);
  return 2.0 * (inst.B() * x + inst.b());
}

double constraint_scale(const GtrsInstance& inst, const VectorXd& x) {
  const double nx = x.norm();
  return 1.0 + inst.B().norm() * nx * nx + 2.0 * inst.b().norm() * nx +
         std::abs(inst.c());
}

double kkt_scale(const GtrsInstance& inst, const VectorXd& x, double lambda) {
  const double al = std::abs(lambda);
  return 1.0 + (inst.A().norm() + al * inst.B().norm()) * x.norm() +
         inst.a().norm() + al * inst.b().norm();
}

VectorXd kkt_residual(const GtrsInstance& inst, const VectorXd& x,
                      double lambda) {
  check_dim(inst, x);
  return (inst.A() + lambda * inst.B()) * x + inst.a() + lambda * inst.b();
}

GtrsInstance parse_instance(std::string_view text,
                            std::vector<std::string>* warnings) {
  const json doc = parse_document(text);
  if (!doc.contains("A") && doc.contains("complex")) {
    return embed(read_complex_block(doc["complex"]));
  }
  const int n = read_dimension(doc);
  MatrixXd A = read_matrix(field(doc, "A"), "A", n);
  VectorXd a = read_vector(field(doc, "a"), "a", n);
  MatrixXd B = read_matrix(field(doc, "B"), "B", n);
  VectorXd b = read_vector(field(doc, "b"), "b", n);
  const double c = read_number(field(doc, "c"), "c");
  const Sense sense = parse_sense(field(doc, "sense"));
  GtrsInstance inst = GtrsInstance::create(std::move(A), std::move(a),
                                           std::move(B), std::move(b), c,
                                           sense, warnings);
  if (doc.contains("complex")) {
    inst = inst.with_complex_origin(read_complex_block(doc["complex"]));
  }
  return inst;
}

ComplexGtrsInstance parse_complex_instance(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.contains("complex")) throw ParseError("document has no 'complex' block");
  return read_complex_block(doc["complex"]);
}

std::string serialize_instance(const GtrsInstance& inst) {
  json doc;
  doc["n"] = inst.n();
  doc["A"] = write_matrix(inst.A());
  doc["a"] = write_vector(inst.a());
  doc["B"] = write_matrix(inst.B());
  doc["b"] = write_vector(inst.b());
  doc["c"] = inst.c();
  doc["sense"] = std::string(to_string(inst.sense()));
  if (inst.complex_origin()) doc["complex"] = write_complex_block(*inst.complex_origin());
  return doc.dump(2) + "\n";
}

std::string serialize_complex_instance(const ComplexGtrsInstance& inst) {
  json doc;
  doc["complex"] = write_complex_block(inst);
  return doc.dump(2) + "\n";
}

}  // namespace gtrs
