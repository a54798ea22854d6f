// Copyright 2026 The modlie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "modlie/io.hpp"

#include <fstream>
#include <sstream>

#include "modlie/errors.hpp"

namespace modlie {

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Rational entry_from_json(const json& e) {
  if (e.is_string()) return Rational::parse(e.get<std::string>());
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw ParseError("matrix entries must be rational strings or integers");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + key + "\" must be a count");
  }
  return v.get<std::size_t>();
}

}  // namespace

RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  if (j.size() != rows) {
    throw SizeMismatch("matrix has " + std::to_string(j.size()) + " rows, expected " +
                       std::to_string(rows));
  }
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    if (row.size() != cols) {
      throw SizeMismatch("matrix row " + std::to_string(i) + " has " +
                         std::to_string(row.size()) + " entries, expected " +
                         std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry_from_json(row[c]);
  }
  return m;
}

json pair_to_json(const ModulePair& v) {
  json j;
  if (!v.name().empty()) j["name"] = v.name();
  j["dim"] = v.dim();
  j["P"] = matrix_to_json(v.P());
  j["Q"] = matrix_to_json(v.Q());
  return j;
}

ModulePair pair_from_json(const json& j) {
  const std::size_t n = count_field(j, "dim");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("field \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return ModulePair(matrix_from_json(field(j, "P"), n, n),
                    matrix_from_json(field(j, "Q"), n, n), name);
}

ModulePair parse_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return pair_from_json(j);
}

json twist_to_json(const Twist& t) {
  return json::array({json::array({t.a11().str(), t.a12().str()}),
                      json::array({t.a21().str(), t.a22().str()})});
}

Twist twist_from_json(const json& j) {
  const RatMatrix m = matrix_from_json(j, 2, 2);
  return Twist(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

json lie_to_json(const LieAlgebra& l) {
  json brackets = json::array();
  const std::size_t d = l.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      json coeffs = json::array();
      for (std::size_t k = 0; k < d; ++k) {
        if (!l.c(i, j, k).is_zero()) coeffs.push_back(json::array({k, l.c(i, j, k).str()}));
      }
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  }
  return {{"dim", d}, {"basis", l.labels()}, {"brackets", brackets}};
}

json fingerprint_to_json(const LieFingerprint& f) {
  return {{"dim", f.dim},
          {"lower_central", f.lower_central_dims},
          {"derived", f.derived_dims},
          {"center_dim", f.center_dim}};
}

json invariants_to_json(const WeakInvariants& inv) {
  json out = json::object();
  for (const auto& [name, value] : components(inv)) out[name] = value;
  return out;
}

json pencil_to_json(const PencilProfile& p) {
  json points = json::array();
  for (const DropPoint& d : p.drop_points) {
    json e = {{"degree", d.degree}, {"drop", d.drop}};
    e["factor"] = d.at_infinity ? "infinity" : d.factor.str("t");
    if (d.point) e["point"] = json::array({d.point->alpha.str(), d.point->beta.str()});
    points.push_back(std::move(e));
  }
  json inv = json::array();
  for (const auto& f : p.invariant_factors) inv.push_back(f.str("t"));
  json form = json::array();
  for (const auto& c : p.drop_form.coefficients()) form.push_back(c.str());
  json counts = json::array();
  for (const auto& [drop, n] : p.qbar_drop_counts) counts.push_back({{"drop", drop}, {"roots", n}});
  return {{"power", p.power},
          {"generic_rank", p.generic_rank},
          {"invariant_factors", inv},
          {"drop_points", points},
          {"drop_form", {{"degree", p.drop_form.degree()}, {"coefficients", form}}},
          {"qbar_drop_counts", counts}};
}

namespace {

struct CertificateWriter {
  json operator()(const IsoCertificate& c) const {
    return {{"kind", "iso"}, {"x", matrix_to_json(c.x)}};
  }
  json operator()(const WeakIsoCertificate& c) const {
    return {{"kind", "weak-iso"}, {"theta", twist_to_json(c.theta)}, {"x", matrix_to_json(c.x)}};
  }
  json operator()(const IdempotentCertificate& c) const {
    return {{"kind", "idempotent"},
            {"idempotent", matrix_to_json(c.idempotent)},
            {"change_of_basis", matrix_to_json(c.change_of_basis)},
            {"image_block", pair_to_json(c.image_block)},
            {"kernel_block", pair_to_json(c.kernel_block)}};
  }
  json operator()(const LocalityCertificate& c) const {
    json rad = json::array();
    for (const auto& m : c.radical) rad.push_back(matrix_to_json(m));
    return {{"kind", "local"}, {"end_dim", c.end_dim}, {"radical", rad}};
  }
};

RatMatrix square_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return matrix_from_json(j, rows, cols);
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json out;
  out["answer"] = to_string(v.answer);
  if (v.certificate) out["certificate"] = std::visit(CertificateWriter{}, *v.certificate);
  if (v.refutation) {
    out["refutation"] = {{"invariant", v.refutation->invariant},
                         {"left", v.refutation->left},
                         {"right", v.refutation->right}};
  }
  json conf = {{"exact", v.confidence.exact}};
  if (v.confidence.error_bound) conf["error_bound"] = *v.confidence.error_bound;
  out["confidence"] = conf;
  out["notes"] = v.notes;
  return out;
}

Certificate certificate_from_json(const json& j0) {
  const json& j = j0.contains("certificate") ? j0.at("certificate") : j0;
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("certificate kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "iso") return IsoCertificate{square_from_json(field(j, "x"))};
  if (k == "weak-iso") {
    return WeakIsoCertificate{twist_from_json(field(j, "theta")), square_from_json(field(j, "x"))};
  }
  if (k == "idempotent") {
    return IdempotentCertificate{square_from_json(field(j, "idempotent")),
                                 square_from_json(field(j, "change_of_basis")),
                                 pair_from_json(field(j, "image_block")),
                                 pair_from_json(field(j, "kernel_block"))};
  }
  if (k == "local") {
    LocalityCertificate c;
    c.end_dim = count_field(j, "end_dim");
    const json& rad = field(j, "radical");
    if (!rad.is_array()) throw ParseError("radical must be an array");
    for (const auto& m : rad) c.radical.push_back(square_from_json(m));
    return c;
  }
  throw ParseError("unknown certificate kind: " + k);
}

}  // namespace modlie
