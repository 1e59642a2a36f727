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

#include "polyreg/field.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "polyreg/factor.hpp"

namespace polyreg {

// ---------------------------------------------------------------------------
// Generator
// ---------------------------------------------------------------------------

Generator Generator::prime(Integer p) {
  Generator g;
  g.is_prime_ = true;
  g.prime_ = std::move(p);
  return g;
}

Generator Generator::poly(Polynomial q) {
  Generator g;
  g.is_prime_ = false;
  g.prime_ = 0;
  g.poly_ = std::move(q);
  return g;
}

std::string Generator::to_string() const { return is_prime_ ? prime_.get_str() : poly_.to_string(); }

bool operator<(const Generator& a, const Generator& b) {
  if (a.is_prime_ != b.is_prime_) return a.is_prime_;
  if (a.is_prime_) return a.prime_ < b.prime_;
  return a.poly_ < b.poly_;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

void FieldElement::add_prime(const Integer& p, const Rational& e) {
  Rational& slot = primes_[p];
  slot += e;
  if (slot == 0) primes_.erase(p);
}

void FieldElement::add_factor(const Polynomial& q, const Rational& e) {
  Rational& slot = factors_[q];
  slot += e;
  if (slot == 0) factors_.erase(q);
}

void FieldElement::absorb_constant(const Rational& c, const Rational& e) {
  if (c == 0) throw Error("zero", "zero constant");
  if (c < 0) {
    if (is_integer(e)) {
      if (e.get_num() % 2 != 0) sign_ = -sign_;
    } else {
      // (-1)^(p/q) is torsion; it has no honest value to keep.
      sign_ = 1;
    }
  }
  const Integer num = abs(c.get_num());
  const Integer& den = c.get_den();
  if (num != 1)
    for (const auto& [p, m] : factor_integer(num)) add_prime(p, e * m);
  if (den != 1)
    for (const auto& [p, m] : factor_integer(den)) add_prime(p, -e * m);
}

FieldElement FieldElement::build(const Rational& constant, const std::vector<std::pair<Polynomial, Rational>>& factors) {
  if (constant == 0) throw Error("zero", "zero constant");
  FieldElement f;
  f.absorb_constant(constant, 1);
  for (const auto& [p, e] : factors) {
    if (p.is_zero()) throw Error("zero", "zero polynomial");
    if (e == 0) continue;
    if (p.degree() == 0) {
      f.absorb_constant(p.coeff(0), e);
      continue;
    }
    Factorization fac = factor_over_q(p);
    f.absorb_constant(fac.unit, e);
    for (const auto& [q, m] : fac.factors) f.add_factor(q, e * m);
  }
  return f;
}

FieldElement FieldElement::from_fraction(const Polynomial& num, const Polynomial& den) {
  if (num.is_zero() || den.is_zero()) throw Error("zero", "zero polynomial in a fraction");
  return build(1, {{num, Rational(1)}, {den, Rational(-1)}});
}

FieldElement FieldElement::from_coordinates(const Coordinates& c) {
  FieldElement f;
  for (const auto& [g, e] : c) {
    if (e == 0) continue;
    if (g.is_prime()) f.add_prime(g.prime_value(), e);
    else f.add_factor(g.polynomial(), e);
  }
  return f;
}

FieldElement FieldElement::pow(const Rational& q) const {
  FieldElement r;
  if (q == 0) return r;
  if (is_integer(q)) r.sign_ = (sign_ < 0 && q.get_num() % 2 != 0) ? -1 : 1;
  for (const auto& [p, e] : primes_) r.primes_[p] = e * q;
  for (const auto& [p, e] : factors_) r.factors_[p] = e * q;
  return r;
}

FieldElement FieldElement::group_op(const FieldElement& a, const Rational& q, const FieldElement& b, const Rational& r) {
  FieldElement x = a.pow(q);
  const FieldElement y = b.pow(r);
  x.sign_ *= y.sign_;
  for (const auto& [p, e] : y.primes_) x.add_prime(p, e);
  for (const auto& [p, e] : y.factors_) x.add_factor(p, e);
  return x;
}

FieldElement FieldElement::negated() const {
  FieldElement r = *this;
  r.sign_ = -sign_;
  return r;
}

bool FieldElement::has_integer_exponents() const {
  for (const auto& [p, e] : primes_)
    if (!is_integer(e)) return false;
  for (const auto& [p, e] : factors_)
    if (!is_integer(e)) return false;
  return true;
}

Rational FieldElement::constant_value() const {
  Rational c = sign_;
  for (const auto& [p, e] : primes_) {
    if (!is_integer(e)) throw Error("fractional", "constant with a fractional exponent");
    Integer pw;
    const long n = std::labs(e.get_num().get_si());
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
    if (e > 0) c *= pw;
    else c /= pw;
  }
  return c;
}

std::pair<Polynomial, Polynomial> FieldElement::fraction() const {
  if (!has_integer_exponents()) throw Error("fractional", "fractional exponent in " + to_string());
  FieldElement constant_part;
  constant_part.sign_ = sign_;
  constant_part.primes_ = primes_;
  const Rational c = constant_part.constant_value();
  Polynomial num = Polynomial::constant(c), den = Polynomial::constant(1);
  for (const auto& [q, e] : factors_) {
    const unsigned n = static_cast<unsigned>(std::labs(e.get_num().get_si()));
    if (e > 0) num *= q.pow(n);
    else den *= q.pow(n);
  }
  return {num, den};
}

FieldElement FieldElement::one_minus(bool* torsion) const {
  if (!has_integer_exponents()) throw Error("fractional", "1 - f needs integer exponents: " + to_string());
  auto [num, den] = fraction();
  Polynomial diff = den - num;
  if (diff.is_zero()) throw Error("degenerate", "f is identically 1");
  FieldElement r = build(1, {{diff, Rational(1)}, {den, Rational(-1)}});
  if (torsion) *torsion = r.is_torsion();
  return r;
}

Rational FieldElement::order_at(const Place& x) const {
  if (x.is_infinity()) {
    Rational s = 0;
    for (const auto& [q, e] : factors_) s += e * q.degree();
    return -s;
  }
  auto it = factors_.find(x.polynomial());
  return it == factors_.end() ? Rational(0) : it->second;
}

namespace {

Complex ipow(Complex w, long n) {
  if (n < 0) return 1.0 / ipow(w, -n);
  Complex r = 1.0;
  while (n) {
    if (n & 1) r *= w;
    w *= w;
    n >>= 1;
  }
  return r;
}

double constant_magnitude_log(const std::map<Integer, Rational>& primes) {
  double s = 0.0;
  for (const auto& [p, e] : primes) s += e.get_d() * std::log(p.get_d());
  return s;
}

}  // namespace

Complex FieldElement::evaluate(Complex z) const {
  if (!has_integer_exponents()) throw Error("fractional", "ambiguous principal power in " + to_string());
  FieldElement c;
  c.sign_ = sign_;
  c.primes_ = primes_;
  Complex v = c.constant_value().get_d();
  for (const auto& [q, e] : factors_) {
    const Complex w = q.eval(z);
    if (w == Complex(0.0, 0.0)) throw Error("pole", "evaluation at a zero or pole of " + q.to_string());
    v *= ipow(w, e.get_num().get_si());
  }
  return v;
}

Complex FieldElement::evaluate_principal(Complex z) const {
  if (has_integer_exponents()) return evaluate(z);
  Complex v = static_cast<double>(sign_) * std::exp(constant_magnitude_log(primes_));
  for (const auto& [q, e] : factors_) {
    const Complex w = q.eval(z);
    if (w == Complex(0.0, 0.0)) throw Error("pole", "evaluation at a zero or pole of " + q.to_string());
    v *= is_integer(e) ? ipow(w, e.get_num().get_si()) : std::pow(w, e.get_d());
  }
  return v;
}

double FieldElement::log_abs(Complex z) const {
  double s = constant_magnitude_log(primes_);
  for (const auto& [q, e] : factors_) {
    const double a = std::abs(q.eval(z));
    if (a == 0.0) throw Error("pole", "log|f| at a zero or pole of " + q.to_string());
    s += e.get_d() * std::log(a);
  }
  return s;
}

Complex FieldElement::dlog(Complex z) const {
  Complex s = 0.0;
  for (const auto& [q, e] : factors_) {
    const Complex w = q.eval(z);
    if (w == Complex(0.0, 0.0)) throw Error("pole", "d log f at a zero or pole of " + q.to_string());
    s += e.get_d() * q.derivative().eval(z) / w;
  }
  return s;
}

std::vector<Complex> FieldElement::singular_points() const {
  std::vector<Complex> out;
  for (const auto& [q, e] : factors_) {
    auto r = complex_roots(q, 1e-10);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Coordinates FieldElement::coordinates() const {
  Coordinates c;
  for (const auto& [p, e] : primes_) c.emplace(Generator::prime(p), e);
  for (const auto& [q, e] : factors_) c.emplace(Generator::poly(q), e);
  return c;
}

namespace {

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "";
  if (is_integer(e)) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

bool is_bare_variable(const Polynomial& q) { return q.degree() == 1 && q.coeff(0) == 0 && q.coeff(1) == 1; }

}  // namespace

std::string FieldElement::to_string() const {
  std::vector<std::string> parts;
  if (!primes_.empty()) {
    if (std::all_of(primes_.begin(), primes_.end(), [](const auto& kv) { return is_integer(kv.second); })) {
      FieldElement c;
      c.primes_ = primes_;
      parts.push_back(c.constant_value().get_str());
    } else {
      for (const auto& [p, e] : primes_) parts.push_back(p.get_str() + exponent_suffix(e));
    }
  }
  for (const auto& [q, e] : factors_) {
    const std::string base = is_bare_variable(q) ? "t" : "(" + q.to_string() + ")";
    parts.push_back(base + exponent_suffix(e));
  }
  std::string out = sign_ < 0 ? "-" : "";
  if (parts.empty()) return out + "1";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.primes_ != b.primes_) return a.primes_ < b.primes_;
  return a.factors_ < b.factors_;
}

bool same_class(const FieldElement& a, const FieldElement& b) {
  return a.prime_exponents() == b.prime_exponents() && a.factors() == b.factors();
}

// ---------------------------------------------------------------------------
// Places
// ---------------------------------------------------------------------------

Place Place::rational(const Rational& a) {
  Place x;
  x.kind_ = Kind::rational;
  x.point_ = a;
  x.poly_ = Polynomial::linear_root(a);
  return x;
}

Place Place::from_polynomial(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) throw Error("place", "a place needs a polynomial of degree >= 1");
  const Polynomial m = p.monic();
  if (m.degree() == 1) return rational(-m.coeff(0));
  if (!is_irreducible(m)) throw Error("place", "not irreducible over Q: " + m.to_string());
  Place x;
  x.kind_ = Kind::algebraic;
  x.poly_ = m;
  return x;
}

Place Place::infinity() { return Place(); }

const Rational& Place::point() const {
  if (kind_ != Kind::rational) throw Error("place", "not a rational place: " + to_string());
  return point_;
}

const Polynomial& Place::polynomial() const {
  if (kind_ == Kind::infinity) throw Error("place", "infinity has no place polynomial");
  return poly_;
}

FieldElement Place::uniformizer() const {
  if (kind_ == Kind::infinity) return FieldElement::variable().inverse();
  return FieldElement::from_polynomial(poly_);
}

std::string Place::to_string() const { return kind_ == Kind::infinity ? "inf" : poly_.to_string(); }

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return a.poly_ < b.poly_;
}

// ---------------------------------------------------------------------------
// Roots and embeddings
// ---------------------------------------------------------------------------

std::vector<Complex> complex_roots(const Polynomial& p0, double precision) {
  if (p0.is_zero()) throw Error("zero", "roots of the zero polynomial");
  const Polynomial p = p0.monic();
  const int n = p.degree();
  std::vector<Complex> roots;
  if (n == 0) return roots;
  if (n == 1) {
    roots.emplace_back(-p.coeff(0).get_d(), 0.0);
    return roots;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Polynomial dp = p.derivative();
  for (int i = 0; i < n; ++i) {
    Complex z = solver.eigenvalues()[i];
    for (int it = 0; it < 50; ++it) {
      const Complex d = dp.eval(z);
      if (d == Complex(0.0, 0.0)) break;
      const Complex step = p.eval(z) / d;
      z -= step;
      if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
    }
    const double bound = precision * std::pow(1.0 + std::abs(z), n);
    if (std::abs(p.eval(z)) > bound)
      throw Error("precision", "root of " + p.to_string() + " not certified to " + std::to_string(precision));
    // Clean up conjugate-symmetry noise on real roots.
    if (std::abs(z.imag()) < 1e-14 * (1.0 + std::abs(z))) z = Complex(z.real(), 0.0);
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

std::vector<Embedding> embeddings_of(const Place& x, double precision) {
  if (precision <= 0) throw Error("precision", "precision must be positive");
  if (x.is_infinity()) throw Error("use-infinity-chart", "infinity has no embedding via a root");
  std::vector<Embedding> out;
  if (x.kind() == Place::Kind::rational) {
    out.push_back({x, Complex(x.point().get_d(), 0.0), 0.0});
    return out;
  }
  for (const Complex& r : complex_roots(x.polynomial(), precision)) out.push_back({x, r, precision});
  return out;
}

std::vector<Place> support(const FieldElement& f) {
  std::vector<Place> out;
  for (const auto& [q, e] : f.factors()) out.push_back(Place::from_polynomial(q));
  if (f.order_at(Place::infinity()) != 0) out.push_back(Place::infinity());
  return out;
}

FieldElement unit_part(const FieldElement& f, const Place& x) {
  const Rational a = f.order_at(x);
  if (a == 0) return f;
  return FieldElement::group_op(f, 1, x.uniformizer(), -a);
}

FieldElement specialize(const FieldElement& u, const Place& x) {
  if (u.order_at(x) != 0) throw Error("not-unit", u.to_string() + " is not a unit at " + x.to_string());
  Coordinates keep;
  for (const auto& [p, e] : u.prime_exponents()) keep.emplace(Generator::prime(p), e);
  FieldElement out = FieldElement::from_coordinates(keep);
  if (u.sign() < 0) out = out.negated();
  if (x.is_infinity()) return out;
  if (x.kind() != Place::Kind::rational) throw Error("algebraic-place", "residue field of " + x.to_string() + " is handled numerically");
  for (const auto& [q, e] : u.factors()) {
    const Rational v = q.eval(x.point());
    out = out * FieldElement::constant(v).pow(e);
  }
  return out;
}

std::vector<Complex> specialize_numeric(const FieldElement& u, const Place& x, double precision) {
  if (u.order_at(x) != 0) throw Error("not-unit", u.to_string() + " is not a unit at " + x.to_string());
  if (x.is_infinity() || x.kind() == Place::Kind::rational) {
    const FieldElement v = specialize(u, x);
    return {v.evaluate_principal(Complex(0.0, 0.0))};
  }
  std::vector<Complex> out;
  for (const auto& emb : embeddings_of(x, precision)) out.push_back(u.evaluate_principal(emb.root));
  return out;
}

}  // namespace polyreg
