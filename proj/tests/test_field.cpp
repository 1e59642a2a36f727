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

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "polyreg/factor.hpp"

using namespace polyreg;
using polyreg::test::E;

namespace {

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(c); }

Rational coord(const FieldElement& f, const Generator& g) {
  const auto c = f.coordinates();
  auto it = c.find(g);
  return it == c.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("factorization over Q") {
  SUBCASE("difference of squares") {
    const auto f = factor_over_q(P({-1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first.degree() == 1);
  }
  SUBCASE("irreducible quadratics stay whole") {
    CHECK(is_irreducible(P({1, 0, 1})));
    CHECK(is_irreducible(P({-2, 0, 1})));
  }
  SUBCASE("swinnerton-dyer style: x^4 - 10x^2 + 1 is irreducible") {
    CHECK(is_irreducible(P({1, 0, -10, 0, 1})));
  }
  SUBCASE("product recombines") {
    const Polynomial a = P({1, 1, 1}), b = P({-3, 0, 0, 1}), c = P({2, 1});
    const auto f = factor_over_q(a * b * b * c * Rational(5));
    CHECK(f.unit == 5);
    Polynomial back = Polynomial::constant(f.unit);
    for (const auto& [q, e] : f.factors) back *= q.pow(static_cast<unsigned>(e));
    CHECK(back == a * b * b * c * Rational(5));
    CHECK(f.factors.size() == 3);
  }
  SUBCASE("integers") {
    const auto f = factor_integer(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(Integer(2), 3));
  }
}

TEST_CASE("build and canonical coordinates") {
  const auto f = FieldElement::build(1, {{P({-1, 0, 1}), Rational(1)}, {P({-3, 1}), Rational(-1)}});
  CHECK(f.factors().size() == 3);
  CHECK(f.factors().at(P({-1, 1})) == 1);
  CHECK(f.factors().at(P({1, 1})) == 1);
  CHECK(f.factors().at(P({-3, 1})) == -1);

  const auto m2 = FieldElement::build(-2, {});
  CHECK(m2.is_constant());
  CHECK(m2.coordinates().size() == 1);
  CHECK(coord(m2, Generator::prime(2)) == 1);

  CHECK(FieldElement::build(1, {{P({1, 0, 1}), Rational(1)}}).factors().count(P({1, 0, 1})) == 1);

  const auto c = E("-12*t/(t-1)").coordinates();
  CHECK(c.size() == 4);
  CHECK(c.at(Generator::prime(2)) == 2);
  CHECK(c.at(Generator::prime(3)) == 1);
  CHECK(c.at(Generator::poly(P({0, 1}))) == 1);
  CHECK(c.at(Generator::poly(P({-1, 1}))) == -1);
  CHECK(FieldElement().coordinates().empty());
}

TEST_CASE("group law") {
  const auto t = FieldElement::variable();
  const auto tm1 = E("t-1"), tm3 = E("t-3");
  const auto g = FieldElement::group_op(t, 2, tm1, -1);
  CHECK(g.factors().at(P({0, 1})) == 2);
  CHECK(g.factors().at(P({-1, 1})) == -1);
  CHECK(FieldElement::group_op(g, 1, g, -1).is_one());
  CHECK(FieldElement::group_op(tm3, Rational(1, 2), tm3, Rational(1, 2)) == tm3);
}

TEST_CASE("one_minus") {
  const auto a = FieldElement::variable().one_minus();
  CHECK(same_class(a, E("t-1")));
  CHECK(same_class(E("t^2/(t^2-1)").one_minus(), E("1/((t-1)*(t+1))")));
  bool torsion = false;
  CHECK(FieldElement::constant(2).one_minus(&torsion).coordinates().empty());
  CHECK(torsion);
}

TEST_CASE("order at places") {
  const auto f = E("(t^2-1)/(t-3)");
  CHECK(f.order_at(Place::rational(1)) == 1);
  CHECK(f.order_at(Place::rational(3)) == -1);
  CHECK(f.order_at(Place::infinity()) == -1);
  CHECK(f.order_at(Place::rational(5)) == 0);
  CHECK(FieldElement::constant(7).order_at(Place::rational(0)) == 0);
  CHECK(FieldElement::constant(7).order_at(Place::infinity()) == 0);
  CHECK(E("t^2+1").order_at(Place::from_polynomial(P({1, 0, 1}))) == 1);
}

TEST_CASE("divisor of a principal element has degree zero") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto f = polyreg::test::random_element(rng);
    Rational deg = 0;
    for (const auto& x : support(f)) deg += f.order_at(x) * x.degree();
    CHECK(deg == 0);
  }
}

TEST_CASE("evaluation and logarithmic derivative") {
  CHECK(std::abs(E("t^2-1").evaluate(2.0) - Complex(3, 0)) < 1e-14);
  CHECK(std::abs(E("t^2/(t-1)").dlog(3.0) - Complex(1.0 / 6.0, 0)) < 1e-14);
  CHECK_THROWS(E("1/(t-1)").evaluate(1.0));

  // dlog against central differences of log f
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 20; ++i) {
    const auto f = polyreg::test::random_element(rng);
    if (!f.has_integer_exponents()) continue;
    const Complex z(u(rng), u(rng));
    const double h = 1e-6;
    const Complex fd = (std::log(f.evaluate(z + h)) - std::log(f.evaluate(z - h))) / (2 * h);
    CHECK(std::abs(fd - f.dlog(z)) < 1e-5 * std::max(1.0, std::abs(f.dlog(z))));
  }
}

TEST_CASE("embeddings") {
  const auto a = embeddings_of(Place::rational(3));
  REQUIRE(a.size() == 1);
  CHECK(std::abs(a[0].root - Complex(3, 0)) < 1e-14);

  const auto b = embeddings_of(Place::from_polynomial(P({1, 0, 1})));
  REQUIRE(b.size() == 2);
  CHECK(std::abs(b[0].root - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(b[1].root - Complex(0, -1)) < 1e-12);

  const auto c = embeddings_of(Place::from_polynomial(P({-2, 0, 1})));
  REQUIRE(c.size() == 2);
  CHECK(std::abs(c[0].root.real() + std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(c[1].root.real() - std::sqrt(2.0)) < 1e-12);

  CHECK_THROWS(embeddings_of(Place::infinity()));
  CHECK_THROWS(Place::from_polynomial(P({-1, 0, 1})));
}

TEST_CASE("expression parser") {
  CHECK(E("(t^2-1)/(t-3)") == E("(t-1)*(t+1)*(t-3)^-1"));
  CHECK(same_class(E("1 - t^2/(t^2-1)"), E("1/(t^2-1)")));
  CHECK(E("1 - t^2/(t^2-1)").constant_value() < 0);
  CHECK(E("-2/5").constant_value() == Rational(-2, 5));
  CHECK(E(" ( t + 1 ) ^ 2 ") == E("t^2+2*t+1"));
  try {
    parse_expr("t^(1/2)");
    FAIL("rational exponent accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "syntax");
  }
  try {
    parse_expr("t + * 2");
    FAIL("bad syntax accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "syntax");
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  try {
    parse_expr("1/(t-t)");
    FAIL("division by zero accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "zero");
  }
  CHECK(parse_place("inf").is_infinity());
  CHECK(parse_place("t-3") == Place::rational(3));
  CHECK(parse_place("t^2+1").degree() == 2);
  CHECK(std::abs(parse_complex("0+1i") - Complex(0, 1)) == 0.0);
  CHECK(std::abs(parse_complex("-2.5-3i") - Complex(-2.5, -3)) == 0.0);
}
