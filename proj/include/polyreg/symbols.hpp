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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyreg/field.hpp"
#include "polyreg/linalg.hpp"
#include "polyreg/verdict.hpp"

namespace polyreg {

enum class Variant { M, Mtilde };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// A sorted word of distinct generators, the canonical basis of the
/// exterior powers of F*_Q.
using Wedge = std::vector<Generator>;

/// Expands w_1 ^ ... ^ w_m multilinearly over coordinates.
std::map<Wedge, Rational> expand_wedge(const std::vector<FieldElement>& factors);
/// Expands over generators already given as coordinate vectors.
std::map<Wedge, Rational> expand_wedge(const std::vector<Coordinates>& factors);

/// One input term  coeff * [arg]_order (x) w_1 ^ ... ^ w_m.
/// order 1 stands for the group element 1 - arg in the first slot; order 0
/// is a pure wedge (arg unused).
struct SymbolTerm {
  Rational coeff = 1;
  int order = 2;
  FieldElement arg;
  std::vector<FieldElement> wedge;
};

/// Canonical basis element of a graded piece.
///   order >= 2: [arg]_order (x) slots
///   order == 1: head (x) slots        (degree n of M)
///   order == 0: slots alone           (degree n of M~, slots has n entries)
struct BasisKey {
  int order = 0;
  FieldElement arg;
  Generator head;
  Wedge slots;

  friend bool operator<(const BasisKey& a, const BasisKey& b);
  friend bool operator==(const BasisKey& a, const BasisKey& b) {
    return a.order == b.order && a.arg == b.arg && a.head == b.head && a.slots == b.slots;
  }
};

std::string to_string(const BasisKey& k);

/// Element of the degree-`degree` piece of the weight-`weight` complex.
/// Terms of degree d carry symbols of order weight - d + 1 and wedges of
/// length d - 1; degree `weight` is F* (x) wedge^(n-1) for M and
/// wedge^n for M~.
class ChainElement {
 public:
  ChainElement(int weight, int degree, Variant variant);

  static ChainElement from_terms(int weight, int degree, Variant variant, const std::vector<SymbolTerm>& terms);

  int weight() const { return weight_; }
  int degree() const { return degree_; }
  Variant variant() const { return variant_; }
  /// Symbol order expected in this degree (1 or 0 in the top degree).
  int symbol_order() const;
  int wedge_length() const;

  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SymbolTerm& t);
  void add(const BasisKey& k, const Rational& c);

  ChainElement& operator+=(const ChainElement& o);
  ChainElement& operator-=(const ChainElement& o);
  friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
  friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
  friend ChainElement operator*(const Rational& c, const ChainElement& a);
  friend bool operator==(const ChainElement& a, const ChainElement& b);

  /// Terms as SymbolTerm values (wedge slots as generator elements).
  std::vector<SymbolTerm> to_symbol_terms() const;
  std::string to_string() const;

 private:
  void check_compatible(const ChainElement& o) const;

  int weight_;
  int degree_;
  Variant variant_;
  std::map<BasisKey, Rational> terms_;
};

FieldElement generator_element(const Generator& g);

ChainElement differential(const ChainElement& e);

/// Replaces every argument by the representative of {f, 1/f} whose first
/// nonzero coordinate is positive, using [1/f]_k = (-1)^(k+1) [f]_k.
ChainElement normalize(const ChainElement& e);

/// Representative of {f, 1/f} and whether the inverse was taken.
std::pair<FieldElement, bool> inversion_representative(const FieldElement& f);

/// Degree-2 data sum_j c_j [f_j]_m (x) g_j with single generator slots.
struct SymbolBasis {
  std::vector<Rational> c;
  std::vector<FieldElement> f;
  std::vector<Generator> g;
  int order = 0;
  std::vector<FieldElement> generators;    ///< A_1..A_l
  std::vector<std::vector<Rational>> s;    ///< l x J, f_j = prod A_k^s_kj
  std::vector<std::vector<Rational>> tmat; ///< l x J, g_j = prod A_k^t_kj
};

SymbolBasis extract_basis(const ChainElement& e);

/// A weight-w relation sum e_i [h_i]_w that is known to hold.
struct PoolMember {
  std::string name;
  int weight = 2;
  std::vector<std::pair<Rational, FieldElement>> terms;
};

/// Relations admitted only when their symbolic certificate holds exactly.
class RelationPool {
 public:
  /// Returns false (and leaves the pool unchanged) when the certificate fails.
  bool admit(const PoolMember& r);
  const std::vector<PoolMember>& members() const { return members_; }
  bool empty() const { return members_.empty(); }

 private:
  std::vector<PoolMember> members_;
};

/// sum_i c_i h_i^(n-2) (x) (h_i ^ (1 - h_i)) in Sym^(n-2) F* (x) wedge^2 F*.
/// Keys are (sorted multiset, sorted pair) flattened as multiset ++ pair.
std::map<std::pair<std::vector<Generator>, Wedge>, Rational> constancy_tensor(
    const std::vector<std::pair<Rational, FieldElement>>& terms, int n);

Verdict is_cocycle(const ChainElement& e, const RelationPool& pool = {});

std::vector<ChainElement> solve_cocycles(const std::vector<SymbolTerm>& term_pool, int weight,
                                         const RelationPool& pool = {}, Variant variant = Variant::Mtilde);

/// One term of a boundary over the residue field k(x).
struct BoundaryTerm {
  Rational coeff;
  int order = 0;                     ///< 0 for a pure wedge
  FieldElement arg;                  ///< unit at x whose value is the symbol argument
  std::vector<FieldElement> wedge;   ///< units at x
};

struct BoundaryResult {
  Place place;
  int weight = 0;
  /// Raw terms before any identification in k(x)* (x) Q.
  std::vector<BoundaryTerm> terms;
  /// Rational places and infinity: canonical form over Q* (x) Q with the
  /// specialized argument kept as a signed constant.
  bool exact = false;
  std::map<BasisKey, Rational> exact_terms;

  bool is_zero() const { return exact ? exact_terms.empty() : terms.empty(); }
  std::string to_string() const;
};

BoundaryResult boundary(const ChainElement& e, const Place& x);

/// Places where some f_j, 1 - f_j or g_j has nonzero order, then infinity.
std::vector<Place> boundary_support(const ChainElement& e);

Verdict is_global(const ChainElement& e, double tol = 1e-9);

/// Exact checks of the cocycle identities on a weight-4 degree-2 cocycle.
Verdict identity_suite(const ChainElement& e);

/// Formal cancellation check of the alternating-sum construction.
Verdict lemma419_check(int n);

/// Number of terms in the formal sum for n.
std::size_t lemma419_term_count(int n);

}  // namespace polyreg
