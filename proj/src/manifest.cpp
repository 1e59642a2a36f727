// Copyright 2026 The polyreg Authors
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

#include "polyreg/manifest.hpp"

#include <cmath>
#include <set>

#include "polyreg/expr.hpp"

namespace polyreg {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where, bool lenient,
                std::vector<std::string>& warnings) {
  for (const auto& [k, v] : obj.items()) {
    if (allowed.count(k)) continue;
    const std::string msg = "unknown field '" + k + "' in " + where;
    if (!lenient) throw Error("manifest", msg);
    warnings.push_back(msg);
  }
}

int json_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if (is_integer(q) && q.get_num().fits_sint_p()) return static_cast<int>(q.get_num().get_si());
  }
  throw Error("manifest", where + " must be an integer");
}

}  // namespace

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.dump());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw Error("manifest", where + ": " + e.what());
    }
  }
  if (v.is_number_float()) throw Error("manifest", where + ": floating-point coefficients are not allowed");
  throw Error("manifest", where + " must be a rational string like \"-2/3\"");
}

ChainElement Manifest::element() const { return ChainElement::from_terms(weight, degree, variant, terms); }

Manifest parse_manifest(const json& doc, bool lenient) {
  if (!doc.is_object()) throw Error("manifest", "a manifest is a JSON object");
  Manifest m;
  check_keys(doc, {"format", "weight", "degree", "variant", "terms", "relation_pool", "task"}, "manifest", lenient,
             m.warnings);
  if (doc.contains("format") && doc["format"] != kManifestFormat) {
    const std::string msg = "manifest format " + doc["format"].dump() + " is not " + kManifestFormat;
    if (!lenient) throw Error("manifest", msg);
    m.warnings.push_back(msg);
  }
  if (!doc.contains("weight")) throw Error("manifest", "manifest needs 'weight'");
  m.weight = json_int(doc["weight"], "weight");
  if (doc.contains("degree")) m.degree = json_int(doc["degree"], "degree");
  if (doc.contains("variant")) {
    if (!doc["variant"].is_string()) throw Error("manifest", "variant must be a string");
    m.variant = parse_variant(doc["variant"].get<std::string>());
  }
  if (doc.contains("terms")) {
    if (!doc["terms"].is_array()) throw Error("manifest", "terms must be an array");
    std::size_t i = 0;
    for (const auto& t : doc["terms"]) {
      const std::string where = "terms[" + std::to_string(i++) + "]";
      if (!t.is_object()) throw Error("manifest", where + " must be an object");
      check_keys(t, {"coeff", "order", "arg", "wedge"}, where, lenient, m.warnings);
      SymbolTerm st;
      st.coeff = t.contains("coeff") ? json_rational(t["coeff"], where + ".coeff") : Rational(1);
      st.order = t.contains("order") ? json_int(t["order"], where + ".order") : m.weight - m.degree + 1;
      if (t.contains("arg")) {
        if (!t["arg"].is_string()) throw Error("manifest", where + ".arg must be an expression string");
        st.arg = parse_expr(t["arg"].get<std::string>());
      } else if (st.order != 0) {
        throw Error("manifest", where + " needs 'arg'");
      }
      if (t.contains("wedge")) {
        if (!t["wedge"].is_array()) throw Error("manifest", where + ".wedge must be an array");
        for (const auto& w : t["wedge"]) {
          if (!w.is_string()) throw Error("manifest", where + ".wedge entries must be expression strings");
          st.wedge.push_back(parse_expr(w.get<std::string>()));
        }
      }
      m.terms.push_back(std::move(st));
    }
  }
  if (doc.contains("relation_pool")) {
    if (!doc["relation_pool"].is_array()) throw Error("manifest", "relation_pool must be an array");
    for (const auto& r : doc["relation_pool"]) {
      if (!r.is_string()) throw Error("manifest", "relation_pool entries must be generator strings");
      m.relation_pool.push_back(r.get<std::string>());
    }
  }
  if (doc.contains("task")) {
    if (!doc["task"].is_object()) throw Error("manifest", "task must be an object");
    m.task = doc["task"];
  }
  return m;
}

json manifest_json(const ChainElement& e, const std::vector<std::string>& relation_pool, const json& task) {
  json doc;
  doc["format"] = kManifestFormat;
  doc["weight"] = e.weight();
  doc["degree"] = e.degree();
  doc["variant"] = to_string(e.variant());
  json terms = json::array();
  for (const auto& t : e.to_symbol_terms()) {
    json j;
    j["coeff"] = to_string(t.coeff);
    j["order"] = t.order;
    if (t.order != 0) j["arg"] = t.arg.to_string();
    json w = json::array();
    for (const auto& f : t.wedge) w.push_back(f.to_string());
    j["wedge"] = w;
    terms.push_back(j);
  }
  doc["terms"] = terms;
  doc["relation_pool"] = relation_pool;
  if (!task.empty()) doc["task"] = task;
  return doc;
}

json verdict_json(const Verdict& v) {
  json j;
  j["name"] = v.name;
  j["pass"] = v.pass;
  j["claimed"] = v.claimed;
  j["computed"] = v.computed;
  j["tolerance"] = v.tolerance;
  j["residual"] = std::isnan(v.residual) ? json(nullptr) : json(v.residual);
  j["mode"] = v.mode;
  j["details"] = v.details;
  json kids = json::array();
  for (const auto& c : v.children) kids.push_back(verdict_json(c));
  j["children"] = kids;
  return j;
}

}  // namespace polyreg
