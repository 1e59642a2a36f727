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

#include <vector>

#include "polyreg/field.hpp"

namespace polyreg {

/// coeff * i^twist, an element of R(twist).
struct PolylogValue {
  double coeff = 0.0;
  int twist = 0;
  /// Set when the evaluation point was within 1e-8 of z = 1.
  bool degraded = false;

  Complex value() const;
  PolylogValue& operator+=(const PolylogValue& o);
  friend PolylogValue operator+(PolylogValue a, const PolylogValue& b) { return a += b; }
  friend PolylogValue operator*(double s, PolylogValue a) {
    a.coeff *= s;
    return a;
  }
};

/// Exact Bernoulli numbers and binary64 zeta values, built once.
class ConstantsTable {
 public:
  static const ConstantsTable& instance();

  int max_index() const { return static_cast<int>(bernoulli_.size()) - 1; }
  /// B_k with B_1 = -1/2.
  const Rational& bernoulli(int k) const;
  /// zeta(s) for any integer s != 1 (negative arguments via Bernoulli numbers).
  double zeta(int s) const;
  /// zeta(s) as an exact rational for s <= 0.
  Rational zeta_nonpositive(int s) const;

 private:
  ConstantsTable();
  std::vector<Rational> bernoulli_;
  std::vector<double> zeta_;  // zeta_[s] for s >= 2
};

/// zeta(s), s >= 2, by Euler-Maclaurin summation.
double zeta_euler_maclaurin(int s);

/// Bernoulli polynomial B_k(x).
Complex bernoulli_polynomial(int k, Complex x);

/// Principal-branch Li_k(z), k >= 1. Throws "pole" for k = 1 at z = 1.
Complex li(int k, Complex z);

/// True within 1e-8 of z = 1, where accuracy is flagged.
bool near_one(Complex z);

/// pi_m(w) written as coeff * i^m, coeff = Re(w * i^(-m)).
PolylogValue project(Complex w, int m);

/// P_{n,Zag}(z); throws "domain" at z = 0 and z = infinity.
PolylogValue p_zag(int n, Complex z);

/// P_n^mod(z). z = 0 and any infinite z give 0; z = 1 gives pi_{n-1}(zeta(n)),
/// i.e. coefficient (-1)^((n-1)/2) zeta(n) for odd n and 0 for even n;
/// n = 1 keeps the pole at 1.
PolylogValue p_mod(int n, Complex z);

/// Bloch-Wigner dilogarithm D(z) = p_mod(2, z).coeff.
double bloch_wigner(Complex z);

/// sum_i c_i P_n^mod(y_i) per embedding, times (n-1)! when include_factor.
/// `values[i]` holds y_i at every embedding (all of equal length).
std::vector<PolylogValue> nf_regulator(int n, const std::vector<double>& coeffs,
                                       const std::vector<std::vector<Complex>>& values, bool include_factor,
                                       int sign = 1);

/// Same for residue-field elements given as units at a place x.
std::vector<PolylogValue> nf_regulator(int n, const std::vector<std::pair<Rational, FieldElement>>& combination,
                                       const Place& x, bool include_factor, int sign = 1);

}  // namespace polyreg
