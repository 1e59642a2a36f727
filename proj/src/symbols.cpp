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

#include "polyreg/symbols.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "polyreg/polylog.hpp"

namespace polyreg {

std::string to_string(Variant v) { return v == Variant::M ? "M" : "Mtilde"; }

Variant parse_variant(const std::string& s) {
  if (s == "M") return Variant::M;
  if (s == "Mtilde" || s == "M~" || s == "tilde") return Variant::Mtilde;
  throw Error("manifest", "unknown variant '" + s + "' (expected M or Mtilde)");
}

// ---------------------------------------------------------------------------
// Wedges
// ---------------------------------------------------------------------------

namespace {

// Appends g at the end of the sorted word w and sorts it back in; returns
// the sign of that move, or 0 when g already occurs.
int insert_last(Wedge& w, const Generator& g) {
  auto it = std::lower_bound(w.begin(), w.end(), g);
  if (it != w.end() && *it == g) return 0;
  const auto after = std::distance(it, w.end());
  w.insert(it, g);
  return after % 2 == 0 ? 1 : -1;
}

// Same, with g placed in front of the word.
int insert_first(Wedge& w, const Generator& g) {
  auto it = std::lower_bound(w.begin(), w.end(), g);
  if (it != w.end() && *it == g) return 0;
  const auto before = std::distance(w.begin(), it);
  w.insert(it, g);
  return before % 2 == 0 ? 1 : -1;
}

Coordinates unit_coordinates(const Generator& g) { return Coordinates{{g, Rational(1)}}; }

}  // namespace

std::map<Wedge, Rational> expand_wedge(const std::vector<Coordinates>& factors) {
  std::map<Wedge, Rational> acc{{Wedge{}, Rational(1)}};
  for (const auto& slot : factors) {
    std::map<Wedge, Rational> next;
    for (const auto& [w, a] : acc) {
      for (const auto& [g, c] : slot) {
        Wedge v = w;
        const int s = insert_last(v, g);
        if (s == 0) continue;
        Rational& x = next[v];
        x += a * c * s;
        if (x == 0) next.erase(v);
      }
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

std::map<Wedge, Rational> expand_wedge(const std::vector<FieldElement>& factors) {
  std::vector<Coordinates> c;
  c.reserve(factors.size());
  for (const auto& f : factors) c.push_back(f.coordinates());
  return expand_wedge(c);
}

FieldElement generator_element(const Generator& g) { return FieldElement::from_coordinates(unit_coordinates(g)); }

// ---------------------------------------------------------------------------
// Keys and chain elements
// ---------------------------------------------------------------------------

bool operator<(const BasisKey& a, const BasisKey& b) {
  if (a.order != b.order) return a.order < b.order;
  if (a.arg != b.arg) return a.arg < b.arg;
  if (a.head != b.head) return a.head < b.head;
  return a.slots < b.slots;
}

namespace {

std::string slot_string(const Generator& g) {
  if (g.is_prime()) return g.prime_value().get_str();
  const Polynomial& q = g.polynomial();
  if (q.degree() == 1 && q.coeff(0) == 0) return "t";
  return "(" + q.to_string() + ")";
}

std::string wedge_string(const Wedge& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ^ ";
    s += slot_string(w[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const BasisKey& k) {
  std::string s;
  if (k.order >= 2) {
    s = "[" + k.arg.to_string() + "]_" + std::to_string(k.order);
    if (!k.slots.empty()) s += " (x) " + wedge_string(k.slots);
  } else if (k.order == 1) {
    s = slot_string(k.head);
    if (!k.slots.empty()) s += " (x) " + wedge_string(k.slots);
  } else {
    s = wedge_string(k.slots);
  }
  return s;
}

ChainElement::ChainElement(int weight, int degree, Variant variant)
    : weight_(weight), degree_(degree), variant_(variant) {
  if (weight < 1) throw Error("shape", "weight must be >= 1");
  if (degree < 1 || degree > weight) throw Error("shape", "degree must lie in 1..weight");
}

ChainElement ChainElement::from_terms(int weight, int degree, Variant variant, const std::vector<SymbolTerm>& terms) {
  ChainElement e(weight, degree, variant);
  for (const auto& t : terms) e.add_term(t);
  return e;
}

int ChainElement::symbol_order() const {
  if (degree_ < weight_) return weight_ - degree_ + 1;
  return variant_ == Variant::M ? 1 : 0;
}

int ChainElement::wedge_length() const {
  if (degree_ == weight_ && variant_ == Variant::Mtilde) return weight_;
  return degree_ - 1;
}

void ChainElement::add(const BasisKey& k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[k];
  slot += c;
  if (slot == 0) terms_.erase(k);
}

void ChainElement::add_term(const SymbolTerm& t) {
  const bool top = degree_ == weight_;
  const int m = static_cast<int>(t.wedge.size());
  if (t.order >= 2) {
    if (top || t.order != symbol_order() || m != degree_ - 1)
      throw Error("shape", "term of order " + std::to_string(t.order) + " with " + std::to_string(m) +
                               " wedge factors does not fit weight " + std::to_string(weight_) + ", degree " +
                               std::to_string(degree_));
    if (t.arg.is_torsion()) throw Error("degenerate", "symbol argument " + t.arg.to_string() + " is torsion");
    for (const auto& [w, c] : expand_wedge(t.wedge)) add(BasisKey{t.order, t.arg, Generator(), w}, t.coeff * c);
    return;
  }
  if (!top) throw Error("shape", "order " + std::to_string(t.order) + " terms only occur in the top degree");
  if (t.order == 1) {
    if (m != weight_ - 1) throw Error("shape", "order-1 term needs weight-1 wedge factors");
    const FieldElement h = t.arg.one_minus();
    if (variant_ == Variant::M) {
      const auto words = expand_wedge(t.wedge);
      for (const auto& [g, a] : h.coordinates())
        for (const auto& [w, c] : words) add(BasisKey{1, FieldElement(), g, w}, t.coeff * a * c);
    } else {
      std::vector<FieldElement> all{h};
      all.insert(all.end(), t.wedge.begin(), t.wedge.end());
      for (const auto& [w, c] : expand_wedge(all)) add(BasisKey{0, FieldElement(), Generator(), w}, t.coeff * c);
    }
    return;
  }
  if (t.order == 0) {
    if (variant_ != Variant::Mtilde) throw Error("shape", "pure wedge terms belong to the M~ variant");
    if (m != weight_) throw Error("shape", "pure wedge term needs weight many factors");
    for (const auto& [w, c] : expand_wedge(t.wedge)) add(BasisKey{0, FieldElement(), Generator(), w}, t.coeff * c);
    return;
  }
  throw Error("shape", "negative symbol order");
}

void ChainElement::check_compatible(const ChainElement& o) const {
  if (weight_ != o.weight_ || degree_ != o.degree_ || variant_ != o.variant_)
    throw Error("shape", "adding chain elements from different groups");
}

ChainElement& ChainElement::operator+=(const ChainElement& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

ChainElement operator*(const Rational& c, const ChainElement& a) {
  ChainElement r(a.weight_, a.degree_, a.variant_);
  if (c == 0) return r;
  for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, v * c);
  return r;
}

bool operator==(const ChainElement& a, const ChainElement& b) {
  return a.weight_ == b.weight_ && a.degree_ == b.degree_ && a.variant_ == b.variant_ && a.terms_ == b.terms_;
}

std::vector<SymbolTerm> ChainElement::to_symbol_terms() const {
  std::vector<SymbolTerm> out;
  for (const auto& [k, c] : terms_) {
    SymbolTerm t;
    t.coeff = c;
    t.order = k.order;
    for (const auto& g : k.slots) t.wedge.push_back(generator_element(g));
    if (k.order >= 2) t.arg = k.arg;
    if (k.order == 1) t.arg = generator_element(k.head).one_minus();
    out.push_back(std::move(t));
  }
  return out;
}

std::string ChainElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    const Rational a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += polyreg::to_string(k);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Differential and normal form
// ---------------------------------------------------------------------------

ChainElement differential(const ChainElement& e) {
  if (e.degree() >= e.weight()) throw Error("degree", "nothing to differentiate in the top degree");
  ChainElement out(e.weight(), e.degree() + 1, e.variant());
  for (const auto& [key, c] : e.terms()) {
    const int k = key.order;
    const FieldElement& f = key.arg;
    if (k >= 3 || (k == 2 && e.variant() == Variant::M)) {
      // [f]_{k-1} (x) f ^ w   or   (1-f) (x) f ^ w
      std::vector<std::pair<Generator, Rational>> heads;
      if (k == 2) {
        for (const auto& [g, a] : f.one_minus().coordinates()) heads.emplace_back(g, a);
      }
      for (const auto& [g, a] : f.coordinates()) {
        Wedge w = key.slots;
        const int s = insert_first(w, g);
        if (s == 0) continue;
        if (k >= 3) {
          out.add(BasisKey{k - 1, f, Generator(), w}, c * a * s);
        } else {
          for (const auto& [h, b] : heads) out.add(BasisKey{1, FieldElement(), h, w}, c * a * b * s);
        }
      }
    } else if (k == 2) {
      std::vector<Coordinates> slots{f.one_minus().coordinates(), f.coordinates()};
      for (const auto& g : key.slots) slots.push_back(unit_coordinates(g));
      for (const auto& [w, a] : expand_wedge(slots)) out.add(BasisKey{0, FieldElement(), Generator(), w}, c * a);
    } else {
      throw Error("degree", "order-" + std::to_string(k) + " term below the top degree");
    }
  }
  return out;
}

std::pair<FieldElement, bool> inversion_representative(const FieldElement& f) {
  const Coordinates c = f.coordinates();
  if (c.empty()) throw Error("degenerate", "torsion argument has no inversion representative");
  if (c.begin()->second > 0) return {f, false};
  return {f.inverse(), true};
}

ChainElement normalize(const ChainElement& e) {
  if (e.variant() != Variant::Mtilde) throw Error("variant", "normalize applies to the M~ variant");
  ChainElement out(e.weight(), e.degree(), e.variant());
  for (const auto& [key, c] : e.terms()) {
    if (key.order < 2) {
      out.add(key, c);
      continue;
    }
    auto [rep, inverted] = inversion_representative(key.arg);
    const Rational sign = (inverted && key.order % 2 == 0) ? -1 : 1;  // (-1)^(k+1)
    out.add(BasisKey{key.order, rep, Generator(), key.slots}, c * sign);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis extraction
// ---------------------------------------------------------------------------

namespace {

class GeneratorIndex {
 public:
  int operator()(const Generator& g) {
    auto [it, inserted] = index_.emplace(g, static_cast<int>(index_.size()));
    return it->second;
  }
  SparseVector vec(const Coordinates& c) {
    SparseVector v;
    for (const auto& [g, e] : c) v[(*this)(g)] = e;
    return v;
  }

 private:
  std::map<Generator, int> index_;
};

}  // namespace

SymbolBasis extract_basis(const ChainElement& e) {
  if (e.degree() != 2 || e.symbol_order() < 2) throw Error("shape", "extract_basis needs a degree-2 element");
  SymbolBasis b;
  b.order = e.symbol_order();
  for (const auto& [key, c] : e.terms()) {
    b.c.push_back(c);
    b.f.push_back(key.arg);
    b.g.push_back(key.slots.at(0));
  }
  const int J = static_cast<int>(b.c.size());
  GeneratorIndex idx;
  IncrementalBasis basis;
  std::vector<int> accepted;
  std::vector<SparseVector> fv, gv;
  for (int j = 0; j < J; ++j) fv.push_back(idx.vec(b.f[static_cast<std::size_t>(j)].coordinates()));
  for (int j = 0; j < J; ++j) gv.push_back(idx.vec(unit_coordinates(b.g[static_cast<std::size_t>(j)])));
  for (int j = 0; j < J; ++j)
    if (basis.add(fv[static_cast<std::size_t>(j)], j)) accepted.push_back(j);
  for (int j = 0; j < J; ++j)
    if (basis.add(gv[static_cast<std::size_t>(j)], J + j)) accepted.push_back(J + j);
  // Generators are the primitive integral multiples of the accepted vectors,
  // so [t^2]_m (x) t gives A = (t) rather than (t^2).
  std::map<int, int> row_of;
  std::map<int, Rational> content_of;
  for (std::size_t k = 0; k < accepted.size(); ++k) {
    const int id = accepted[k];
    row_of[id] = static_cast<int>(k);
    const SparseVector& v = id < J ? fv[static_cast<std::size_t>(id)] : gv[static_cast<std::size_t>(id - J)];
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [i, x] : v) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    const Rational content(num_gcd, den_lcm);
    content_of[id] = content;
    const FieldElement source = id < J ? b.f[static_cast<std::size_t>(id)]
                                       : generator_element(b.g[static_cast<std::size_t>(id - J)]);
    b.generators.push_back(FieldElement::from_coordinates(source.pow(1 / content).coordinates()));
  }
  const std::size_t l = accepted.size();
  b.s.assign(l, std::vector<Rational>(static_cast<std::size_t>(J), Rational(0)));
  b.tmat = b.s;
  for (int j = 0; j < J; ++j) {
    const auto sf = basis.express(fv[static_cast<std::size_t>(j)]);
    const auto sg = basis.express(gv[static_cast<std::size_t>(j)]);
    if (!sf || !sg) throw Error("internal", "basis extraction lost a vector");
    for (const auto& [id, v] : *sf)
      b.s[static_cast<std::size_t>(row_of.at(id))][static_cast<std::size_t>(j)] = v * content_of.at(id);
    for (const auto& [id, v] : *sg)
      b.tmat[static_cast<std::size_t>(row_of.at(id))][static_cast<std::size_t>(j)] = v * content_of.at(id);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Relation pool and the symbolic certificate
// ---------------------------------------------------------------------------

std::map<std::pair<std::vector<Generator>, Wedge>, Rational> constancy_tensor(
    const std::vector<std::pair<Rational, FieldElement>>& terms, int n) {
  if (n < 2) throw Error("domain", "the certificate needs n >= 2");
  std::map<std::pair<std::vector<Generator>, Wedge>, Rational> out;
  for (const auto& [c, h] : terms) {
    if (c == 0 || h.is_torsion()) continue;
    const Coordinates hc = h.coordinates();
    bool torsion = false;
    const FieldElement one_minus_h = h.one_minus(&torsion);
    if (torsion) continue;
    const auto pair = expand_wedge(std::vector<Coordinates>{hc, one_minus_h.coordinates()});
    // h^(n-2) in Sym^(n-2): sum over ordered tuples mapped to sorted multisets.
    std::map<std::vector<Generator>, Rational> sym{{{}, Rational(1)}};
    for (int r = 0; r < n - 2; ++r) {
      std::map<std::vector<Generator>, Rational> next;
      for (const auto& [ms, a] : sym)
        for (const auto& [g, e] : hc) {
          auto v = ms;
          v.insert(std::upper_bound(v.begin(), v.end(), g), g);
          next[v] += a * e;
        }
      sym = std::move(next);
    }
    for (const auto& [ms, a] : sym)
      for (const auto& [w, b] : pair) {
        Rational& slot = out[{ms, w}];
        slot += c * a * b;
        if (slot == 0) out.erase({ms, w});
      }
  }
  return out;
}

bool RelationPool::admit(const PoolMember& r) {
  if (!constancy_tensor(r.terms, r.weight).empty()) return false;
  members_.push_back(r);
  return true;
}

// ---------------------------------------------------------------------------
// Cocycles
// ---------------------------------------------------------------------------

namespace {

class KeyIndex {
 public:
  int operator()(const BasisKey& k) {
    auto [it, inserted] = index_.emplace(k, static_cast<int>(index_.size()));
    return it->second;
  }
  SparseVector vec(const ChainElement& e) {
    SparseVector v;
    for (const auto& [k, c] : e.terms()) v[(*this)(k)] = c;
    return v;
  }

 private:
  std::map<BasisKey, int> index_;
};

ChainElement canonical(const ChainElement& e) {
  return e.variant() == Variant::Mtilde ? normalize(e) : e;
}

void collect_generators(const ChainElement& e, std::set<Generator>& out) {
  for (const auto& [k, c] : e.terms()) {
    if (k.order >= 2)
      for (const auto& [g, a] : k.arg.coordinates()) out.insert(g);
    if (k.order == 1) out.insert(k.head);
    out.insert(k.slots.begin(), k.slots.end());
  }
}

void subsets(const std::vector<Generator>& gens, std::size_t m, std::size_t start, Wedge& cur, std::vector<Wedge>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i) {
    cur.push_back(gens[i]);
    subsets(gens, m, i + 1, cur, out);
    cur.pop_back();
  }
}

// R (x) w for every pool member R of matching weight and every word w of
// the right length in the given generators.
struct Candidate {
  std::string label;
  ChainElement element;
};

std::vector<Candidate> pool_candidates(const RelationPool& pool, const std::set<Generator>& gens, int weight,
                                       int degree, Variant variant) {
  std::vector<Candidate> out;
  if (pool.empty()) return out;
  ChainElement shape(weight, degree, variant);
  const int order = shape.symbol_order();
  if (order < 2) return out;
  std::vector<Wedge> words;
  Wedge cur;
  const std::vector<Generator> gv(gens.begin(), gens.end());
  subsets(gv, static_cast<std::size_t>(shape.wedge_length()), 0, cur, words);
  for (const auto& r : pool.members()) {
    if (r.weight != order) continue;
    for (const auto& w : words) {
      ChainElement e(weight, degree, variant);
      for (const auto& [c, h] : r.terms) {
        if (h.is_torsion()) continue;
        e.add(BasisKey{order, h, Generator(), w}, c);
      }
      e = canonical(e);
      if (e.is_zero()) continue;
      BasisKey label_key{0, FieldElement(), Generator(), w};
      out.push_back({r.name + " (x) " + to_string(label_key), std::move(e)});
    }
  }
  return out;
}

}  // namespace

Verdict is_cocycle(const ChainElement& e, const RelationPool& pool) {
  Verdict v;
  v.name = "is_cocycle";
  v.claimed = "d(e) = 0";
  const ChainElement d = canonical(differential(e));
  if (d.is_zero()) {
    v.pass = true;
    v.mode = "strict";
    v.computed = "0";
    return v;
  }
  v.computed = d.to_string();
  std::set<Generator> gens;
  collect_generators(e, gens);
  const auto cands = pool_candidates(pool, gens, d.weight(), d.degree(), d.variant());
  if (!cands.empty()) {
    KeyIndex idx;
    std::vector<SparseVector> cols;
    for (const auto& c : cands) cols.push_back(idx.vec(c.element));
    const SparseVector b = idx.vec(d);
    if (auto sol = solve_columns(cols, b)) {
      v.pass = true;
      v.mode = "pool-assisted";
      for (const auto& [i, x] : *sol) v.details.push_back(x.get_str() + " * " + cands[static_cast<std::size_t>(i)].label);
      return v;
    }
  }
  v.pass = false;
  v.mode = "failed";
  v.details.push_back("residual " + d.to_string());
  return v;
}

std::vector<ChainElement> solve_cocycles(const std::vector<SymbolTerm>& term_pool, int weight, const RelationPool& pool,
                                         Variant variant) {
  // Solutions are reported in the input terms as given; the linear algebra
  // runs on canonical forms.
  std::vector<ChainElement> terms;
  std::set<Generator> gens;
  for (const auto& t : term_pool) {
    ChainElement e(weight, 2, variant);
    e.add_term(t);
    collect_generators(canonical(e), gens);
    terms.push_back(std::move(e));
  }
  const int N = static_cast<int>(terms.size());
  if (N == 0) return {};
  KeyIndex idx;
  std::vector<SparseVector> cols;
  for (const auto& e : terms) cols.push_back(idx.vec(canonical(differential(e))));
  for (const auto& c : pool_candidates(pool, gens, weight, 3, variant)) cols.push_back(scaled(idx.vec(c.element), -1));
  // Transpose into rows for the kernel.
  std::map<int, SparseVector> rows_by_key;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, x] : cols[j]) rows_by_key[r][static_cast<int>(j)] = x;
  std::vector<SparseVector> rows;
  for (auto& [r, row] : rows_by_key) rows.push_back(std::move(row));
  std::vector<SparseVector> projected;
  for (const auto& k : kernel(rows, static_cast<int>(cols.size()))) {
    SparseVector p;
    for (const auto& [i, x] : k)
      if (i < N) p[i] = x;
    if (!p.empty()) projected.push_back(std::move(p));
  }
  std::vector<ChainElement> out;
  for (const auto& row : rref(projected).rows) {
    ChainElement e(weight, 2, variant);
    for (const auto& [i, x] : row) e += x * terms[static_cast<std::size_t>(i)];
    if (!canonical(e).is_zero()) out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary
// ---------------------------------------------------------------------------

std::string BoundaryResult::to_string() const {
  std::ostringstream os;
  if (exact) {
    if (exact_terms.empty()) return "0";
    bool first = true;
    for (const auto& [k, c] : exact_terms) {
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const Rational a = abs(c);
      if (a != 1) os << a.get_str() << "*";
      os << polyreg::to_string(k);
    }
    return os.str();
  }
  if (terms.empty()) return "0";
  bool first = true;
  for (const auto& t : terms) {
    os << (first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + "));
    first = false;
    const Rational a = abs(t.coeff);
    if (a != 1) os << a.get_str() << "*";
    if (t.order >= 2) os << "[" << t.arg.to_string() << "(x)]_" << t.order;
    for (std::size_t i = 0; i < t.wedge.size(); ++i)
      os << (i == 0 ? (t.order >= 2 ? " (x) " : "") : " ^ ") << "(" << t.wedge[i].to_string() << ")(x)";
    if (t.order < 2 && t.wedge.empty()) os << "1";
  }
  os << "  at " << place.to_string();
  return os.str();
}

BoundaryResult boundary(const ChainElement& e, const Place& x) {
  BoundaryResult out;
  out.place = x;
  out.weight = e.weight();
  out.exact = x.kind() != Place::Kind::algebraic;
  const bool top = e.degree() == e.weight();
  using RawKey = std::tuple<int, FieldElement, std::vector<FieldElement>>;
  std::map<RawKey, Rational> raw;
  for (const auto& [key, c] : e.terms()) {
    std::vector<FieldElement> words;
    if (key.order == 1) words.push_back(generator_element(key.head));
    for (const auto& g : key.slots) words.push_back(generator_element(g));
    const int order = key.order >= 2 ? key.order : 0;
    if (order >= 2 && key.arg.order_at(x) != 0) continue;  // sp kills it
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Rational a = words[i].order_at(x);
      if (a == 0) continue;
      std::vector<FieldElement> units;
      for (std::size_t l = 0; l < words.size(); ++l)
        if (l != i) units.push_back(unit_part(words[l], x));
      Rational coeff = c * a * (i % 2 == 0 ? 1 : -1);
      if (top) coeff = -coeff;
      Rational& slot = raw[RawKey{order, order >= 2 ? key.arg : FieldElement(), units}];
      slot += coeff;
    }
  }
  for (const auto& [k, c] : raw) {
    if (c == 0) continue;
    out.terms.push_back(BoundaryTerm{c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
  }
  if (out.exact) {
    for (const auto& t : out.terms) {
      std::vector<FieldElement> vals;
      for (const auto& u : t.wedge) vals.push_back(specialize(u, x));
      const FieldElement arg = t.order >= 2 ? specialize(t.arg, x) : FieldElement();
      for (const auto& [w, a] : expand_wedge(vals)) {
        Rational& slot = out.exact_terms[BasisKey{t.order, arg, Generator(), w}];
        slot += t.coeff * a;
        if (slot == 0) out.exact_terms.erase(BasisKey{t.order, arg, Generator(), w});
      }
    }
  }
  return out;
}

std::vector<Place> boundary_support(const ChainElement& e) {
  std::set<Place> places;
  auto add_support = [&](const FieldElement& f) {
    for (const auto& p : support(f))
      if (!p.is_infinity()) places.insert(p);
  };
  for (const auto& [key, c] : e.terms()) {
    if (key.order >= 2) {
      add_support(key.arg);
      if (key.arg.has_integer_exponents()) {
        bool torsion = false;
        add_support(key.arg.one_minus(&torsion));
      }
    }
    if (key.order == 1 && !key.head.is_prime()) places.insert(Place::from_polynomial(key.head.polynomial()));
    for (const auto& g : key.slots)
      if (!g.is_prime()) places.insert(Place::from_polynomial(g.polynomial()));
  }
  std::vector<Place> out(places.begin(), places.end());
  out.push_back(Place::infinity());
  return out;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

Verdict is_global(const ChainElement& e, double tol) {
  Verdict v;
  v.name = "is_global";
  v.claimed = "0 at every place and embedding";
  v.tolerance = tol;
  v.pass = true;
  if (e.degree() != 2 || e.symbol_order() < 2) {
    v.pass = false;
    v.details.push_back("is_global needs a degree-2 element of weight >= 3");
    return v;
  }
  const ChainElement d = canonical(differential(e));
  v.details.push_back(d.is_zero() ? "strict cocycle" : "not a strict cocycle: d(e) = " + d.to_string());
  const int n = e.symbol_order();
  double worst = 0.0;
  for (const Place& x : boundary_support(e)) {
    const BoundaryResult b = boundary(e, x);
    std::vector<std::pair<Rational, FieldElement>> combo;
    for (const auto& t : b.terms)
      if (t.order >= 2) combo.emplace_back(t.coeff, t.arg);
    const auto vals = nf_regulator(n, combo, x, false);
    for (std::size_t s = 0; s < vals.size(); ++s) {
      Verdict c;
      c.name = "place " + x.to_string() + (vals.size() > 1 ? " embedding " + std::to_string(s) : "");
      c.claimed = "0";
      c.computed = fmt(vals[s].coeff);
      c.residual = std::abs(vals[s].coeff);
      c.tolerance = tol;
      c.pass = c.residual <= tol;
      c.details.push_back("boundary " + b.to_string());
      worst = std::max(worst, c.residual);
      v.children.push_back(std::move(c));
    }
  }
  v.absorb_children();
  v.residual = worst;
  v.computed = fmt(worst);
  v.mode = "numeric";
  return v;
}

}  // namespace polyreg
