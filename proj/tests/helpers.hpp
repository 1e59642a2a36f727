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

#include <random>

#include "polyreg/expr.hpp"
#include "polyreg/field.hpp"
#include "polyreg/symbols.hpp"

namespace polyreg::test {

inline FieldElement E(const char* s) { return parse_expr(s); }

// Small random element of Q(t)* (x) Q: a product of a few linear and
// quadratic factors with small exponents.
inline FieldElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> root(-4, 4), expo(-2, 2), count(1, 3), kind(0, 3);
  FieldElement f = FieldElement::constant(Rational(std::uniform_int_distribution<int>(1, 6)(rng)));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Polynomial p = kind(rng) == 0 ? Polynomial{Rational(1 + root(rng) * root(rng)), 0, 1}
                                  : Polynomial::linear_root(Rational(root(rng)));
    int e = expo(rng);
    if (e == 0) e = 1;
    f = f * FieldElement::from_polynomial(p).pow(e);
  }
  return f;
}

inline ChainElement random_chain(std::mt19937_64& rng, int weight, int degree, int terms = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<SymbolTerm> ts;
  for (int i = 0; i < terms; ++i) {
    SymbolTerm t;
    t.coeff = coeff(rng);
    if (t.coeff == 0) t.coeff = 1;
    t.order = weight - degree + 1;
    t.arg = random_element(rng);
    for (int j = 0; j < degree - 1; ++j) t.wedge.push_back(random_element(rng));
    ts.push_back(t);
  }
  return ChainElement::from_terms(weight, degree, Variant::Mtilde, ts);
}

}  // namespace polyreg::test
