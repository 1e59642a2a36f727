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

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyreg/polynomial.hpp"

namespace polyreg {

using Complex = std::complex<double>;

/// A basis vector of Q(t)* (x) Q: a rational prime or a monic irreducible
/// polynomial. Primes sort before polynomials.
class Generator {
 public:
  static Generator prime(Integer p);
  static Generator poly(Polynomial q);

  bool is_prime() const { return is_prime_; }
  const Integer& prime_value() const { return prime_; }
  const Polynomial& polynomial() const { return poly_; }
  std::string to_string() const;

  friend bool operator<(const Generator& a, const Generator& b);
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.is_prime_ == b.is_prime_ && a.prime_ == b.prime_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }

 private:
  bool is_prime_ = true;
  Integer prime_;
  Polynomial poly_;
};

using Coordinates = std::map<Generator, Rational>;

class Place;

/// Nonzero element of Q(t)* (x) Q in factored form.
///
/// The rational constant is stored as a sign times prime powers so that
/// rational exponents make sense; the sign survives integer powers only.
/// Polynomial keys are monic and irreducible over Q; exponents are never zero.
class FieldElement {
 public:
  /// The identity.
  FieldElement() = default;

  /// build(c, [(p_i, e_i)]): makes every p_i monic, factors it over Q and
  /// merges exponents. Degree-0 polynomials are folded into the constant.
  static FieldElement build(const Rational& constant,
                            const std::vector<std::pair<Polynomial, Rational>>& factors = {});
  static FieldElement constant(const Rational& c) { return build(c); }
  static FieldElement from_polynomial(const Polynomial& p) { return build(1, {{p, Rational(1)}}); }
  /// Quotient of two nonzero polynomials.
  static FieldElement from_fraction(const Polynomial& num, const Polynomial& den);
  static FieldElement variable() { return from_polynomial(Polynomial{0, 1}); }
  /// Sign +1, with the given coordinates.
  static FieldElement from_coordinates(const Coordinates& c);

  /// a^q * b^r
  static FieldElement group_op(const FieldElement& a, const Rational& q, const FieldElement& b, const Rational& r);
  FieldElement pow(const Rational& q) const;
  FieldElement inverse() const { return pow(-1); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return group_op(a, 1, b, 1); }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return group_op(a, 1, b, -1); }
  FieldElement negated() const;

  int sign() const { return sign_; }
  const std::map<Integer, Rational>& prime_exponents() const { return primes_; }
  const std::map<Polynomial, Rational>& factors() const { return factors_; }

  bool is_constant() const { return factors_.empty(); }
  /// Trivial in the Q-vector space (covers both 1 and -1).
  bool is_torsion() const { return primes_.empty() && factors_.empty(); }
  /// Exactly the rational function 1.
  bool is_one() const { return is_torsion() && sign_ == 1; }
  bool has_integer_exponents() const;

  /// Constant value as a rational; requires a constant with integer exponents.
  Rational constant_value() const;
  /// f = num/den with integer exponents; num carries the constant.
  std::pair<Polynomial, Polynomial> fraction() const;

  /// 1 - f. `torsion` (optional) is set when the result is +-1 in F*_Q.
  FieldElement one_minus(bool* torsion = nullptr) const;

  Rational order_at(const Place& x) const;

  /// Honest value; throws "pole" at a zero or pole and "fractional" when a
  /// rational exponent makes the value ambiguous.
  Complex evaluate(Complex z) const;
  /// Value with principal powers for fractional exponents.
  Complex evaluate_principal(Complex z) const;
  /// log|f(z)|; single valued for every exponent.
  double log_abs(Complex z) const;
  /// f'/f at z.
  Complex dlog(Complex z) const;
  /// Zeros and poles in C (roots of every polynomial factor).
  std::vector<Complex> singular_points() const;

  Coordinates coordinates() const;

  /// Printable form; parseable by the expression grammar when all exponents
  /// are integers.
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.sign_ == b.sign_ && a.primes_ == b.primes_ && a.factors_ == b.factors_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  /// Storage order (sign included), used for map keys.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  void add_prime(const Integer& p, const Rational& e);
  void add_factor(const Polynomial& q, const Rational& e);
  void absorb_constant(const Rational& c, const Rational& e);

  int sign_ = 1;
  std::map<Integer, Rational> primes_;
  std::map<Polynomial, Rational> factors_;
};

/// True iff coordinates agree, i.e. equality in F*_Q.
bool same_class(const FieldElement& a, const FieldElement& b);

/// Closed point of P^1 over Q.
class Place {
 public:
  enum class Kind { rational, algebraic, infinity };

  static Place rational(const Rational& a);
  /// Monic-izes p; degree 1 gives a rational place. Throws unless p is
  /// irreducible over Q.
  static Place from_polynomial(const Polynomial& p);
  static Place infinity();

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  /// Rational point (kind rational only).
  const Rational& point() const;
  /// Monic irreducible polynomial (finite places).
  const Polynomial& polynomial() const;
  int degree() const { return kind_ == Kind::infinity ? 1 : poly_.degree(); }
  FieldElement uniformizer() const;
  /// "t-3", "t^2+1" or "inf".
  std::string to_string() const;

  friend bool operator<(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) { return a.kind_ == b.kind_ && a.poly_ == b.poly_; }

 private:
  Kind kind_ = Kind::infinity;
  Rational point_;
  Polynomial poly_;
};

struct Embedding {
  Place place;
  Complex root;
  double precision = 0.0;
};

/// All complex roots of the place polynomial. Throws "use-infinity-chart"
/// at infinity and "precision" when certification fails.
std::vector<Embedding> embeddings_of(const Place& x, double precision = 1e-12);

/// Complex roots of a nonzero polynomial (companion-matrix eigenvalues,
/// Newton polishing, residual check). Sorted by real part, then imaginary
/// part descending.
std::vector<Complex> complex_roots(const Polynomial& p, double precision = 1e-12);

/// Every place where f has nonzero order (infinity included when it does).
std::vector<Place> support(const FieldElement& f);

/// Value at x of a unit u at x. Exact for rational places and infinity (a
/// constant element of Q* (x) Q, sign kept where meaningful); throws for
/// algebraic places, whose residue fields are handled numerically.
FieldElement specialize(const FieldElement& u, const Place& x);

/// Numeric value of a unit u at each embedding of x.
std::vector<Complex> specialize_numeric(const FieldElement& u, const Place& x, double precision = 1e-12);

/// u = f * pi^(-ord), a unit at x.
FieldElement unit_part(const FieldElement& f, const Place& x);

}  // namespace polyreg
