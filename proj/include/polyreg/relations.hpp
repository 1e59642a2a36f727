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

#include <string>
#include <variant>
#include <vector>

#include "polyreg/field.hpp"
#include "polyreg/symbols.hpp"
#include "polyreg/verdict.hpp"

namespace polyreg {

/// A parameter of a relation generator: an exact element of Q(t)* (x) Q or
/// a complex number (numeric checks only).
using RelationParam = std::variant<FieldElement, Complex>;

/// sum_i coeff_i {arg_i}_weight.
///
/// Built from exact parameters the arguments live in `args`; built from
/// complex parameters only `values` is filled. Arguments that hit 0 or
/// infinity numerically are kept (p_mod gives 0 there) and listed in `flags`.
struct FormalRelation {
  int weight = 2;
  std::string provenance;
  std::vector<Rational> coeffs;
  std::vector<FieldElement> args;
  std::vector<Complex> values;
  std::vector<std::string> flags;

  bool is_symbolic() const { return !args.empty() || values.empty(); }
  std::size_t size() const { return coeffs.size(); }
  /// (coeff, arg) pairs; requires is_symbolic().
  std::vector<std::pair<Rational, FieldElement>> terms() const;
  PoolMember pool_member() const;
};

FormalRelation five_term(const RelationParam& x, const RelationParam& y);

enum class AuxKind { inversion, one_minus, duplication };
AuxKind parse_aux_kind(const std::string& s);
FormalRelation aux_relation(AuxKind kind, const RelationParam& x);

/// The 22-term weight-3 relation with its two closing terms (23 in all).
FormalRelation goncharov_22(const RelationParam& a1, const RelationParam& a2, const RelationParam& a3);

enum class VerifyMode { symbolic, numeric, both };
VerifyMode parse_verify_mode(const std::string& s);

struct VerifyOptions {
  int samples = 50;
  double tol = 1e-8;
  unsigned long long seed = 0x0f1e2d3c;
};

/// symbolic: sum c_i h_i^(n-2) (x) (h_i ^ (1 - h_i)) = 0 exactly.
/// numeric: |sum c_i p_mod(n, h_i)| < tol, at sample points when the
/// arguments depend on t.
Verdict verify_relation(const FormalRelation& r, int n, VerifyMode mode, const VerifyOptions& opt = {});

/// Max |sum_i c_i p_mod(n, h_i(z))| over the sample points (or the single
/// value for constant arguments).
double relation_residual(const FormalRelation& r, int n, const VerifyOptions& opt, bool* degraded = nullptr);

/// Reads "five_term(x=t, y=1/2)", "goncharov22(a1=t, a2=2, a3=3)",
/// "inversion(x=2)", "one_minus(x=...)", "duplication(x=...)".
FormalRelation parse_relation_generator(const std::string& text);

/// Exact expression if it parses, complex number otherwise.
RelationParam parse_param(const std::string& text);

}  // namespace polyreg
