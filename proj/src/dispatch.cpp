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

#include "polyreg/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "polyreg/expr.hpp"
#include "polyreg/manifest.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/regulator.hpp"
#include "polyreg/relations.hpp"
#include "polyreg/symbols.hpp"

namespace polyreg {

using nlohmann::json;

namespace {

// Parameter access with string-or-number tolerance (flags arrive as strings).
class Params {
 public:
  Params(json values, std::string command) : v_(std::move(values)), command_(std::move(command)) {}

  bool has(const std::string& k) const { return v_.contains(k) && !v_[k].is_null(); }

  std::string str(const std::string& k, const std::string& def = "") const {
    if (!has(k)) return def;
    const json& x = v_[k];
    if (x.is_string()) return x.get<std::string>();
    return x.dump();
  }

  std::string required(const std::string& k) const {
    if (!has(k)) throw Error("usage", command_ + " needs --" + k);
    return str(k);
  }

  int integer(const std::string& k, int def) const {
    if (!has(k)) return def;
    const json& x = v_[k];
    if (x.is_number_integer()) return x.get<int>();
    try {
      std::size_t pos = 0;
      const int r = std::stoi(str(k), &pos);
      if (pos == str(k).size()) return r;
    } catch (const std::exception&) {
    }
    throw Error("usage", "--" + k + " must be an integer");
  }

  double real(const std::string& k, double def) const {
    if (!has(k)) return def;
    const json& x = v_[k];
    if (x.is_number()) return x.get<double>();
    try {
      std::size_t pos = 0;
      const double r = std::stod(str(k), &pos);
      if (pos == str(k).size()) return r;
    } catch (const std::exception&) {
    }
    throw Error("usage", "--" + k + " must be a number");
  }

  bool flag(const std::string& k, bool def) const {
    if (!has(k)) return def;
    const json& x = v_[k];
    if (x.is_boolean()) return x.get<bool>();
    const std::string s = str(k);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw Error("usage", "--" + k + " must be true or false");
  }

  Complex complex(const std::string& k, Complex def) const {
    if (!has(k)) return def;
    const json& x = v_[k];
    if (x.is_number()) return {x.get<double>(), 0.0};
    return parse_complex(str(k));
  }

  std::vector<double> reals(const std::string& k, std::vector<double> def) const {
    if (!has(k)) return def;
    const json& x = v_[k];
    std::vector<double> out;
    if (x.is_array()) {
      for (const auto& e : x) out.push_back(e.is_number() ? e.get<double>() : std::stod(e.get<std::string>()));
      return out;
    }
    std::stringstream ss(str(k));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  }

  const json& raw(const std::string& k) const { return v_.at(k); }

 private:
  json v_;
  std::string command_;
};

struct Context {
  std::string command;
  Params params;
  std::optional<Manifest> manifest;
  json values = json::array();
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  void value(const std::string& name, const json& v, double tolerance, const std::string& op) {
    json j;
    j["name"] = name;
    j["value"] = v;
    j["tolerance"] = tolerance;
    j["op"] = op;
    values.push_back(j);
  }

  const Manifest& need_manifest() const {
    if (!manifest) throw Error("usage", command + " needs a manifest (--manifest FILE)");
    return *manifest;
  }
};

std::string polylog_string(const PolylogValue& p) {
  return format_double(p.coeff) + " * i^" + std::to_string(p.twist);
}

json polylog_json(const PolylogValue& p) {
  return json{{"coeff", p.coeff}, {"twist", p.twist}, {"value", format_complex(p.value())}, {"degraded", p.degraded}};
}

RelationPool build_pool(Context& c, int n) {
  RelationPool pool;
  if (!c.manifest) return pool;
  for (const auto& s : c.manifest->relation_pool) {
    const FormalRelation r = parse_relation_generator(s);
    if (r.weight != n) {
      c.notes.push_back("relation " + s + " has weight " + std::to_string(r.weight) + ", not " + std::to_string(n) +
                        "; skipped");
      continue;
    }
    if (!pool.admit(r.pool_member())) c.notes.push_back("relation " + s + " failed its certificate; not admitted");
  }
  return pool;
}

ResidueVersion parse_version(const std::string& s) {
  if (s == "mod") return ResidueVersion::mod;
  if (s == "zag") return ResidueVersion::zag;
  throw Error("usage", "--version must be mod or zag");
}

std::vector<std::vector<Complex>> complex_matrix(const json& m, const std::string& what) {
  json doc = m;
  if (m.is_string()) doc = json::parse(m.get<std::string>());
  if (!doc.is_array()) throw Error("usage", what + " must be a JSON array of rows");
  std::vector<std::vector<Complex>> out;
  for (const auto& row : doc) {
    if (!row.is_array()) throw Error("usage", what + " must be a JSON array of rows");
    std::vector<Complex> r;
    for (const auto& x : row) r.push_back(x.is_number() ? Complex(x.get<double>(), 0.0) : parse_complex(x.get<std::string>()));
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Handlers
// ---------------------------------------------------------------------------

void eval_polylog(Context& c, bool zag) {
  const int n = c.params.integer("n", 2);
  const Complex z = c.params.complex("z", Complex(0.5, 0.0));
  const PolylogValue p = zag ? p_zag(n, z) : p_mod(n, z);
  const std::string name = std::string(zag ? "P_" : "P_") + std::to_string(n) + (zag ? ",Zag(" : "^mod(") +
                           format_complex(z) + ")";
  c.value(name, polylog_json(p), 1e-12, zag ? "p_zag" : "p_mod");
  c.notes.push_back(name + " = " + polylog_string(p) + (p.degraded ? "  (near z = 1, accuracy degraded)" : ""));
}

void eval_li(Context& c) {
  const int k = c.params.integer("n", c.params.integer("k", 2));
  const Complex z = c.params.complex("z", Complex(0.5, 0.0));
  const Complex v = li(k, z);
  const std::string name = "Li_" + std::to_string(k) + "(" + format_complex(z) + ")";
  c.value(name, format_complex(v), 1e-12, "li");
}

void check_cocycle(Context& c) {
  const ChainElement e = c.need_manifest().element();
  const RelationPool pool = build_pool(c, e.weight() - e.degree() + 1);
  c.verdicts.push_back(is_cocycle(e, pool));
}

void boundary_cmd(Context& c) {
  const ChainElement e = c.need_manifest().element();
  std::vector<Place> places;
  if (c.params.has("place")) {
    places.push_back(parse_place(c.params.str("place")));
  } else {
    places = boundary_support(e);
    places.push_back(Place::infinity());
  }
  for (const auto& x : places) {
    const BoundaryResult b = boundary(e, x);
    c.value("boundary at " + x.to_string(), b.to_string(), 0.0, "boundary");
  }
}

void is_global_cmd(Context& c) {
  const ChainElement e = c.need_manifest().element();
  c.verdicts.push_back(is_global(e, c.params.real("tol", 1e-9)));
}

BoundaryOptions boundary_options(const Context& c) {
  BoundaryOptions o;
  o.tol = c.params.real("tol", o.tol);
  o.factor = c.params.real("factor", o.factor);
  o.sign = c.params.integer("sign", o.sign);
  o.version = parse_version(c.params.str("version", "mod"));
  o.radii = c.params.reals("radii", o.radii);
  return o;
}

void verify_boundary_cmd(Context& c) {
  const ChainElement e = c.need_manifest().element();
  const BoundaryOptions o = boundary_options(c);
  if (c.params.has("place")) {
    c.verdicts.push_back(verify_boundary(e, parse_place(c.params.str("place")), o));
    return;
  }
  auto places = boundary_support(e);
  places.push_back(Place::infinity());
  for (const auto& x : places) c.verdicts.push_back(verify_boundary(e, x, o));
}

void residue_cmd(Context& c) {
  const ChainElement e = c.need_manifest().element();
  ContourSpec spec;
  spec.place = parse_place(c.params.required("place"));
  spec.embedding = static_cast<std::size_t>(c.params.integer("embedding", 0));
  spec.radii = c.params.reals("radii", spec.radii);
  spec.nodes = c.params.integer("nodes", spec.nodes);
  spec.version = parse_version(c.params.str("version", "mod"));
  const ContourResult r = contour_residue(e, spec);
  json per = json::array();
  for (std::size_t i = 0; i < r.per_radius.size(); ++i)
    per.push_back(json{{"radius", spec.radii[i]}, {"integral", format_complex(r.per_radius[i])}, {"nodes", r.nodes[i]}});
  c.value("contour residue at " + spec.place.to_string(), format_complex(r.residue), spec.node_tol,
          "contour_residue");
  c.value("circle integrals", per, spec.node_tol, "contour_residue");
  c.value("extrapolation fit residual", r.fit_residual, 0.0, "contour_residue");
  c.notes.push_back("center of the chart disc " + format_complex(r.center));
  Verdict v;
  v.name = "node doubling converged on every circle";
  v.pass = r.converged;
  v.mode = "numeric";
  v.tolerance = spec.node_tol;
  c.verdicts.push_back(v);
}

std::vector<std::pair<Rational, FieldElement>> combination(const Context& c, int* n) {
  if (c.params.has("relation")) {
    const FormalRelation r = parse_relation_generator(c.params.str("relation"));
    if (n && *n == 0) *n = r.weight;
    return r.terms();
  }
  const Manifest& m = c.need_manifest();
  std::vector<std::pair<Rational, FieldElement>> out;
  for (const auto& t : m.terms) out.emplace_back(t.coeff, t.arg);
  if (n && *n == 0) *n = m.weight;
  return out;
}

void constancy_cmd(Context& c) {
  int n = c.params.integer("n", 0);
  const auto comb = combination(c, &n);
  c.verdicts.push_back(constancy_check(comb, n, c.params.integer("samples", 100), c.params.real("tol", 1e-8)));
}

void standard_integral_cmd(Context& c) {
  StandardIntegralOptions o;
  o.rel_tol = c.params.real("tol", o.rel_tol);
  o.epsilons = c.params.reals("eps", o.epsilons);
  const auto which = parse_standard_integral(c.params.str("which", "diarg_dlog"));
  c.verdicts.push_back(standard_integral(which, c.params.complex("c", Complex(2.0, 0.0)), o));
}

void thm34_cmd(Context& c) {
  const FieldElement f = parse_expr(c.params.str("f", "t"));
  const FieldElement g = parse_expr(c.params.str("g", "t-3"));
  const int n = c.params.integer("n", 3);
  if (c.params.has("z")) {
    const Complex z = c.params.complex("z", 0.0);
    const OneFormValue w = thm34_integrand(f, g, n, z, c.params.flag("scaled", false));
    const OneFormValue m = thm34_main_integrand(f, g, n, z);
    c.value("W(f,g,n) dz", format_complex(w.a), 1e-14, "thm34_integrand");
    c.value("W(f,g,n) dzbar", format_complex(w.b), 1e-14, "thm34_integrand");
    c.value("main integrand dz", format_complex(m.a), 1e-14, "thm34_integrand");
    c.value("main integrand dzbar", format_complex(m.b), 1e-14, "thm34_integrand");
  }
  c.verdicts.push_back(
      inversion_vanish_check(f, g, n, c.params.integer("samples", 100), c.params.real("tol", 1e-12)));
}

void relation_cmd(Context& c) {
  FormalRelation r;
  if (c.params.has("generator")) {
    r = parse_relation_generator(c.params.str("generator"));
  } else {
    std::string kind = c.params.required("kind");
    for (auto& ch : kind)
      if (ch == '-') ch = '_';
    if (kind == "five_term") {
      r = five_term(parse_param(c.params.required("x")), parse_param(c.params.required("y")));
    } else if (kind == "goncharov22" || kind == "goncharov_22") {
      r = goncharov_22(parse_param(c.params.required("a1")), parse_param(c.params.required("a2")),
                       parse_param(c.params.required("a3")));
    } else {
      r = aux_relation(parse_aux_kind(kind), parse_param(c.params.required("x")));
    }
  }
  VerifyOptions o;
  o.samples = c.params.integer("samples", o.samples);
  o.tol = c.params.real("tol", o.tol);
  const int n = c.params.integer("n", r.weight);
  json args = json::array();
  for (std::size_t i = 0; i < r.size(); ++i)
    args.push_back(json{{"coeff", to_string(r.coeffs[i])},
                        {"arg", r.is_symbolic() ? r.args[i].to_string() : format_complex(r.values[i])}});
  c.value("terms", args, 0.0, "relation");
  c.verdicts.push_back(verify_relation(r, n, parse_verify_mode(c.params.str("mode", "both")), o));
}

void lemma419_cmd(Context& c) {
  const int n = c.params.integer("n", 4);
  c.value("term count", lemma419_term_count(n), 0.0, "lemma419");
  c.verdicts.push_back(lemma419_check(n));
}

void identities_cmd(Context& c) {
  const Manifest& m = c.need_manifest();
  if (!c.params.flag("solve", false)) {
    c.verdicts.push_back(identity_suite(m.element()));
    return;
  }
  // Treat the terms as a pool, solve for strict cocycles, check each.
  const RelationPool pool = build_pool(c, m.weight - 1);
  const auto cocycles = solve_cocycles(m.terms, m.weight, pool, m.variant);
  c.value("cocycles found", cocycles.size(), 0.0, "solve_cocycles");
  for (const auto& e : cocycles) {
    Verdict v = identity_suite(e);
    v.name += " on " + e.to_string();
    c.verdicts.push_back(std::move(v));
  }
}

void reg_det_cmd(Context& c) {
  const auto R = complex_matrix(c.params.raw("R"), "R");
  const auto T = complex_matrix(c.params.raw("T"), "T");
  const int n = c.params.integer("n", 2);
  const DeterminantResult d = regulator_determinant(R, T, n);
  c.value("det(R)/((2 pi i)^(n r) det T)", d.value, 1e-12, "regulator_determinant");
  c.value("imaginary residual", d.imag_residual, 1e-9, "regulator_determinant");
  Verdict v;
  v.name = "determinant ratio is real";
  v.mode = "numeric";
  v.tolerance = 1e-9;
  v.claimed = "0";
  v.residual = std::abs(d.imag_residual);
  v.computed = format_double(d.imag_residual);
  v.pass = v.residual <= 1e-9 * std::max(1.0, std::abs(d.value));
  c.verdicts.push_back(v);
}

struct Command {
  std::vector<std::string> params;
  std::function<void(Context&)> run;
};

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"eval-pmod", {{"n", "z"}, [](Context& c) { eval_polylog(c, false); }}},
      {"eval-pzag", {{"n", "z"}, [](Context& c) { eval_polylog(c, true); }}},
      {"eval-li", {{"n", "k", "z"}, eval_li}},
      {"check-cocycle", {{}, check_cocycle}},
      {"boundary", {{"place"}, boundary_cmd}},
      {"is-global", {{"tol"}, is_global_cmd}},
      {"verify-boundary", {{"place", "tol", "factor", "sign", "version", "radii"}, verify_boundary_cmd}},
      {"residue", {{"place", "embedding", "radii", "nodes", "version"}, residue_cmd}},
      {"constancy", {{"relation", "n", "samples", "tol"}, constancy_cmd}},
      {"standard-integral", {{"which", "c", "tol", "eps"}, standard_integral_cmd}},
      {"thm34-check", {{"f", "g", "n", "samples", "tol", "z", "scaled"}, thm34_cmd}},
      {"relation",
       {{"kind", "generator", "x", "y", "a1", "a2", "a3", "mode", "n", "samples", "tol"}, relation_cmd}},
      {"lemma419", {{"n"}, lemma419_cmd}},
      {"identities", {{"solve"}, identities_cmd}},
      {"reg-det", {{"R", "T", "n"}, reg_det_cmd}},
  };
  return table;
}

int exit_for(const Error& e) {
  static const std::set<std::string> numeric{"quadrature", "precision", "internal"};
  return numeric.count(e.kind()) ? kExitFail : kExitUsage;
}

void render_verdict(std::ostringstream& os, const json& v, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << (v["pass"].get<bool>() ? "PASS " : "FAIL ")
     << v["name"].get<std::string>();
  const std::string computed = v["computed"].get<std::string>();
  const std::string claimed = v["claimed"].get<std::string>();
  if (!computed.empty()) os << "  computed " << computed;
  if (!claimed.empty()) os << "  expected " << claimed;
  if (v["tolerance"].get<double>() > 0) os << "  tol " << format_double(v["tolerance"].get<double>());
  if (!v["mode"].get<std::string>().empty()) os << "  [" << v["mode"].get<std::string>() << "]";
  os << "\n";
  for (const auto& d : v["details"]) os << std::string(static_cast<std::size_t>(depth) * 2 + 4, ' ') << d.get<std::string>() << "\n";
  for (const auto& c : v["children"]) render_verdict(os, c, depth + 1);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "eval-pmod", "eval-pzag", "eval-li",   "check-cocycle", "boundary", "is-global",   "verify-boundary",
      "residue",   "constancy", "standard-integral", "thm34-check", "relation", "lemma419", "identities",
      "reg-det"};
  return names;
}

const std::vector<std::string>& command_params(const std::string& command) {
  auto it = commands().find(command);
  if (it == commands().end()) throw Error("usage", "unknown command '" + command + "'");
  return it->second.params;
}

std::string render_report(const json& report) {
  std::ostringstream os;
  os << report.value("task", std::string("?")) << ": " << (report.value("pass", false) ? "pass" : "FAIL") << "\n";
  if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
  for (const auto& w : report.value("warnings", json::array())) os << "warning: " << w.get<std::string>() << "\n";
  for (const auto& n : report.value("notes", json::array())) os << n.get<std::string>() << "\n";
  for (const auto& v : report.value("values", json::array())) {
    if (v["value"].is_string() || v["value"].is_number())
      os << v["name"].get<std::string>() << " = " << (v["value"].is_string() ? v["value"].get<std::string>() : v["value"].dump())
         << "\n";
  }
  for (const auto& v : report.value("verdicts", json::array())) render_verdict(os, v, 0);
  return os.str();
}

DispatchResult dispatch(const std::string& command, const json& args, bool lenient) {
  const auto start = std::chrono::steady_clock::now();
  DispatchResult out;
  json& rep = out.report;
  rep["format"] = kReportFormat;
  rep["task"] = command;
  rep["inputs"] = args;
  json warnings = json::array();
  try {
    auto it = commands().find(command);
    if (it == commands().end()) throw Error("usage", "unknown command '" + command + "'");
    if (!args.is_object()) throw Error("usage", "arguments must be a JSON object");

    json params = json::object();
    std::optional<Manifest> manifest;
    if (args.contains("manifest") && !args["manifest"].is_null()) {
      manifest = parse_manifest(args["manifest"], lenient);
      for (const auto& w : manifest->warnings) warnings.push_back(w);
      // A manifest's task block may carry parameters for other commands.
      for (const auto& [k, v] : manifest->task.items())
        if (std::find(it->second.params.begin(), it->second.params.end(), k) != it->second.params.end())
          params[k] = v;
    }
    for (const auto& [k, v] : args.items())
      if (k != "manifest") params[k] = v;
    const std::set<std::string> allowed(it->second.params.begin(), it->second.params.end());
    for (const auto& [k, v] : params.items()) {
      if (allowed.count(k)) continue;
      const std::string msg = "parameter '" + k + "' is not used by " + command;
      if (!lenient) throw Error("usage", msg);
      warnings.push_back(msg);
    }
    Context ctx{command, Params(params, command), std::move(manifest), json::array(), {}, {}};
    it->second.run(ctx);
    bool pass = true;
    json verdicts = json::array();
    for (const auto& v : ctx.verdicts) {
      pass = pass && v.pass;
      verdicts.push_back(verdict_json(v));
    }
    rep["verdicts"] = verdicts;
    rep["values"] = ctx.values;
    rep["notes"] = ctx.notes;
    rep["pass"] = pass;
    out.exit_code = pass ? kExitPass : kExitFail;
  } catch (const Error& e) {
    rep["pass"] = false;
    rep["error"] = e.kind() + ": " + e.what();
    out.exit_code = exit_for(e);
  } catch (const json::exception& e) {
    rep["pass"] = false;
    rep["error"] = std::string("manifest: ") + e.what();
    out.exit_code = kExitUsage;
  } catch (const std::exception& e) {
    rep["pass"] = false;
    rep["error"] = std::string("internal: ") + e.what();
    out.exit_code = kExitFail;
  }
  rep["warnings"] = warnings;
  rep["exit_code"] = out.exit_code;
  rep["wall_clock_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.human = render_report(rep);
  return out;
}

}  // namespace polyreg
