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

#include "polyreg/relations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <random>

#include "polyreg/expr.hpp"
#include "polyreg/polylog.hpp"

namespace polyreg {

std::vector<std::pair<Rational, FieldElement>> FormalRelation::terms() const {
  if (!is_symbolic()) throw Error("domain", provenance + " has complex parameters and no exact form");
  std::vector<std::pair<Rational, FieldElement>> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.emplace_back(coeffs[i], args[i]);
  return out;
}

PoolMember FormalRelation::pool_member() const { return PoolMember{provenance, weight, terms()}; }

namespace {

bool is_exact(const RelationParam& p) { return std::holds_alternative<FieldElement>(p); }

Complex as_complex(const RelationParam& p) {
  if (const auto* z = std::get_if<Complex>(&p)) return *z;
  const auto& f = std::get<FieldElement>(p);
  if (!f.is_constant() || !f.has_integer_exponents())
    throw Error("domain", "cannot mix the function " + f.to_string() + " with complex parameters");
  return {f.constant_value().get_d(), 0.0};
}

std::string param_string(const RelationParam& p) {
  if (const auto* f = std::get_if<FieldElement>(&p)) return f->to_string();
  return format_complex(std::get<Complex>(p));
}

// Arithmetic that stays exact while every operand is exact.
struct Arith {
  bool exact;

  RelationParam mul(const RelationParam& a, const RelationParam& b) const {
    if (exact) return std::get<FieldElement>(a) * std::get<FieldElement>(b);
    return as_complex(a) * as_complex(b);
  }
  RelationParam div(const RelationParam& a, const RelationParam& b) const {
    if (exact) return std::get<FieldElement>(a) / std::get<FieldElement>(b);
    const Complex d = as_complex(b);
    if (d == 0.0) return Complex(INFINITY, 0.0);
    return as_complex(a) / d;
  }
  RelationParam neg(const RelationParam& a) const {
    if (exact) return std::get<FieldElement>(a).negated();
    return -as_complex(a);
  }
  RelationParam one_minus(const RelationParam& a) const {
    if (exact) return std::get<FieldElement>(a).one_minus();
    return 1.0 - as_complex(a);
  }
  RelationParam square(const RelationParam& a) const { return mul(a, a); }
};

class Builder {
 public:
  Builder(int weight, std::string provenance, bool exact) {
    r_.weight = weight;
    r_.provenance = std::move(provenance);
    exact_ = exact;
  }

  void add(const Rational& c, const RelationParam& h) {
    r_.coeffs.push_back(c);
    if (exact_) {
      r_.args.push_back(std::get<FieldElement>(h));
      return;
    }
    const Complex z = as_complex(h);
    if (z == 0.0 || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
      r_.flags.push_back("term " + std::to_string(r_.coeffs.size()) + " has argument " +
                        (z == 0.0 ? std::string("0") : std::string("infinity")) + ", counted as 0");
    r_.values.push_back(z);
  }

  FormalRelation take() { return std::move(r_); }

 private:
  FormalRelation r_;
  bool exact_ = true;
};

[[noreturn]] void degenerate(const std::string& what, const std::string& why) {
  throw Error("degenerate", what + ": " + why);
}

void require_not(const RelationParam& x, std::initializer_list<int> values, const std::string& what) {
  for (int v : values) {
    bool hit;
    if (const auto* f = std::get_if<FieldElement>(&x))
      hit = f->is_constant() && f->has_integer_exponents() && f->constant_value() == v;
    else
      hit = std::get<Complex>(x) == Complex(v, 0.0);
    if (hit) degenerate(what, "parameter " + param_string(x) + " equals " + std::to_string(v));
  }
}

}  // namespace

FormalRelation five_term(const RelationParam& x, const RelationParam& y) {
  const std::string name = "five_term(x=" + param_string(x) + ", y=" + param_string(y) + ")";
  const Arith a{is_exact(x) && is_exact(y)};
  Builder b(2, name, a.exact);
  try {
    const RelationParam xy = a.mul(x, y);
    require_not(x, {0, 1}, name);
    require_not(y, {0, 1}, name);
    require_not(xy, {0, 1}, name);
    const RelationParam one_minus_xy = a.one_minus(xy);
    b.add(1, x);
    b.add(1, y);
    b.add(1, a.div(a.one_minus(x), one_minus_xy));
    b.add(1, one_minus_xy);
    b.add(1, a.div(a.one_minus(y), one_minus_xy));
  } catch (const Error& e) {
    if (e.kind() == "degenerate") degenerate(name, e.what());
    throw;
  }
  return b.take();
}

AuxKind parse_aux_kind(const std::string& s) {
  if (s == "inversion") return AuxKind::inversion;
  if (s == "one_minus" || s == "one-minus") return AuxKind::one_minus;
  if (s == "duplication") return AuxKind::duplication;
  throw Error("usage", "unknown relation kind '" + s + "'");
}

FormalRelation aux_relation(AuxKind kind, const RelationParam& x) {
  static const char* names[] = {"inversion", "one_minus", "duplication"};
  const std::string name = std::string(names[static_cast<int>(kind)]) + "(x=" + param_string(x) + ")";
  const Arith a{is_exact(x)};
  Builder b(2, name, a.exact);
  require_not(x, {0, 1, -1}, name);
  try {
    switch (kind) {
      case AuxKind::inversion:
        b.add(1, x);
        b.add(1, a.div(a.exact ? RelationParam(FieldElement()) : RelationParam(Complex(1.0)), x));
        break;
      case AuxKind::one_minus:
        b.add(1, x);
        b.add(1, a.one_minus(x));
        break;
      case AuxKind::duplication:
        b.add(1, a.square(x));
        b.add(-2, x);
        b.add(-2, a.neg(x));
        break;
    }
  } catch (const Error& e) {
    if (e.kind() == "degenerate") degenerate(name, e.what());
    throw;
  }
  return b.take();
}

FormalRelation goncharov_22(const RelationParam& a1, const RelationParam& a2, const RelationParam& a3) {
  const std::string name =
      "goncharov22(a1=" + param_string(a1) + ", a2=" + param_string(a2) + ", a3=" + param_string(a3) + ")";
  const bool exact = is_exact(a1) && is_exact(a2) && is_exact(a3);
  if (exact) {
    int moving = 0;
    for (const auto* p : {&a1, &a2, &a3})
      if (!std::get<FieldElement>(*p).is_constant()) ++moving;
    if (moving > 1) throw Error("domain", name + ": at most one parameter may depend on t");
  }
  const Arith a{exact};
  Builder b(3, name, exact);
  const RelationParam al[3] = {a1, a2, a3};
  for (const auto& x : al) require_not(x, {0}, name);
  try {
    RelationParam be[3];
    for (int i = 0; i < 3; ++i) {
      be[i] = a.one_minus(a.mul(al[i], a.one_minus(al[(i + 2) % 3])));
      if (!exact && as_complex(be[i]) == 0.0) degenerate(name, "beta_" + std::to_string(i + 1) + " = 0");
    }
    for (int i = 0; i < 3; ++i) {
      const RelationParam& ai = al[i];
      const RelationParam& ap = al[(i + 2) % 3];
      const RelationParam& bi = be[i];
      const RelationParam& bp = be[(i + 2) % 3];
      const RelationParam& bn = be[(i + 1) % 3];
      b.add(1, ai);
      b.add(1, bi);
      b.add(-1, a.div(bi, ap));
      b.add(1, a.div(bi, a.mul(ap, ai)));
      b.add(1, a.div(a.mul(ai, bp), bn));
      b.add(1, a.neg(a.div(bi, a.mul(ai, bp))));
      b.add(-1, a.div(a.mul(a.mul(ai, ap), bn), bi));
    }
    b.add(-3, exact ? RelationParam(FieldElement()) : RelationParam(Complex(1.0)));
    b.add(1, a.neg(a.mul(a.mul(al[0], al[1]), al[2])));
  } catch (const Error& e) {
    if (e.kind() == "degenerate") degenerate(name, e.what());
    throw;
  }
  return b.take();
}

VerifyMode parse_verify_mode(const std::string& s) {
  if (s == "symbolic") return VerifyMode::symbolic;
  if (s == "numeric") return VerifyMode::numeric;
  if (s == "both") return VerifyMode::both;
  throw Error("usage", "mode must be symbolic, numeric or both");
}

namespace {

bool depends_on_t(const FormalRelation& r) {
  return std::any_of(r.args.begin(), r.args.end(), [](const FieldElement& f) { return !f.is_constant(); });
}

std::vector<Complex> sample_points(const FormalRelation& r, const VerifyOptions& opt) {
  std::vector<Complex> bad;
  for (const auto& f : r.args) {
    for (Complex z : f.singular_points()) bad.push_back(z);
    if (!f.is_torsion() && f.has_integer_exponents()) {
      bool torsion = false;
      try {
        for (Complex z : f.one_minus(&torsion).singular_points()) bad.push_back(z);
      } catch (const Error&) {
      }
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < opt.samples) {
    const Complex z(u(rng), u(rng));
    if (std::all_of(bad.begin(), bad.end(), [&](Complex w) { return std::abs(z - w) > 1e-3; })) out.push_back(z);
  }
  return out;
}

double term_sum(const FormalRelation& r, int n, const std::vector<Complex>& values, bool* degraded) {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const PolylogValue p = p_mod(n, values[i]);
    if (p.degraded && degraded) *degraded = true;
    s += r.coeffs[i].get_d() * p.coeff;
  }
  return s;
}

}  // namespace

double relation_residual(const FormalRelation& r, int n, const VerifyOptions& opt, bool* degraded) {
  if (!r.is_symbolic()) return std::abs(term_sum(r, n, r.values, degraded));
  if (!depends_on_t(r)) {
    std::vector<Complex> v;
    for (const auto& f : r.args) v.push_back(f.evaluate(0.0));
    return std::abs(term_sum(r, n, v, degraded));
  }
  double worst = 0.0;
  for (Complex z : sample_points(r, opt)) {
    std::vector<Complex> v;
    for (const auto& f : r.args) v.push_back(f.evaluate(z));
    worst = std::max(worst, std::abs(term_sum(r, n, v, degraded)));
  }
  return worst;
}

Verdict verify_relation(const FormalRelation& r, int n, VerifyMode mode, const VerifyOptions& opt) {
  Verdict v;
  v.name = r.provenance;
  v.pass = true;
  if (n != r.weight) {
    v.pass = false;
    v.details.push_back("n = " + std::to_string(n) + " does not match the relation weight " +
                        std::to_string(r.weight));
    return v;
  }
  for (const auto& f : r.flags) v.details.push_back(f);
  v.details.push_back(std::to_string(r.size()) + " terms");

  if (mode != VerifyMode::numeric) {
    Verdict s;
    s.name = "symbolic certificate";
    s.claimed = "0";
    s.mode = "strict";
    if (!r.is_symbolic()) {
      s.pass = true;
      s.mode = "skipped";
      s.computed = "n/a";
      s.details.push_back("complex parameters have no exact form");
    } else {
      const auto t = constancy_tensor(r.terms(), n);
      s.pass = t.empty();
      s.computed = t.empty() ? "0" : std::to_string(t.size()) + " nonzero coordinates";
      s.residual = static_cast<double>(t.size());
    }
    v.children.push_back(std::move(s));
  }
  if (mode != VerifyMode::symbolic) {
    Verdict s;
    s.name = "numeric sum of P_" + std::to_string(n) + "^mod";
    s.claimed = "0";
    s.mode = "numeric";
    s.tolerance = opt.tol;
    bool degraded = false;
    try {
      s.residual = relation_residual(r, n, opt, &degraded);
      s.pass = s.residual < opt.tol;
      s.computed = format_double(s.residual);
      if (r.is_symbolic() && depends_on_t(r)) s.details.push_back(std::to_string(opt.samples) + " sample points");
      if (degraded) s.details.push_back("an argument came within 1e-8 of 1; accuracy degraded");
    } catch (const Error& e) {
      s.pass = false;
      s.details.push_back(std::string(e.kind()) + ": " + e.what());
    }
    v.children.push_back(std::move(s));
  }
  v.absorb_children();
  return v;
}

RelationParam parse_param(const std::string& text) {
  try {
    return parse_expr(text);
  } catch (const Error& e) {
    if (e.kind() != "syntax") throw;
  }
  return parse_complex(text);
}

FormalRelation parse_relation_generator(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error("syntax", "expected name(key=value, ...) in \"" + text + "\"");
  std::string name;
  for (char c : text.substr(0, open))
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  std::replace(name.begin(), name.end(), '-', '_');

  // Split on top-level commas.
  std::map<std::string, std::string> kv;
  const std::string body = text.substr(open + 1, close - open - 1);
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    const auto eq = cur.find('=');
    if (eq == std::string::npos) throw Error("syntax", "expected key=value in \"" + text + "\"");
    std::string key;
    for (char c : cur.substr(0, eq))
      if (!std::isspace(static_cast<unsigned char>(c))) key += c;
    if (!kv.emplace(key, cur.substr(eq + 1)).second) throw Error("syntax", "repeated key " + key);
    cur.clear();
  };
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) flush();
    else cur += c;
  }
  if (!cur.empty()) flush();

  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("syntax", name + " needs " + key + "= in \"" + text + "\"");
    RelationParam p = parse_param(it->second);
    kv.erase(it);
    return p;
  };
  FormalRelation r;
  if (name == "five_term" || name == "fiveterm") {
    const auto x = take("x");
    const auto y = take("y");
    r = five_term(x, y);
  } else if (name == "goncharov22" || name == "goncharov_22") {
    const auto a1 = take("a1");
    const auto a2 = take("a2");
    const auto a3 = take("a3");
    r = goncharov_22(a1, a2, a3);
  } else if (name == "inversion" || name == "one_minus" || name == "duplication") {
    r = aux_relation(parse_aux_kind(name), take("x"));
  } else {
    throw Error("syntax", "unknown relation generator '" + name + "'");
  }
  if (!kv.empty()) throw Error("syntax", "unknown key '" + kv.begin()->first + "' in \"" + text + "\"");
  return r;
}

}  // namespace polyreg
