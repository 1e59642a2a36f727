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

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "polyreg/relations.hpp"

using namespace polyreg;
using polyreg::test::E;

namespace {

bool passes(const FormalRelation& r, int n, VerifyMode m) { return verify_relation(r, n, m).pass; }

std::vector<std::string> arg_strings(const FormalRelation& r) {
  std::vector<std::string> out;
  for (const auto& a : r.args) out.push_back(a.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("five-term arguments") {
  const auto r = five_term(E("t"), E("1/2"));
  REQUIRE(r.size() == 5);
  CHECK(r.args[0] == E("t"));
  CHECK(r.args[1] == E("1/2"));
  CHECK(r.args[2] == E("(1-t)/(1-t/2)"));
  CHECK(r.args[3] == E("1-t/2"));
  CHECK(r.args[4] == E("(1/2)/(1-t/2)"));
}

TEST_CASE("five-term certificate and numerics") {
  for (const char* y : {"1/2", "t", "-3"}) {
    const auto r = five_term(E("t"), E(y));
    CHECK_MESSAGE(passes(r, 2, VerifyMode::symbolic), "y = " << y);
    CHECK_MESSAGE(passes(r, 2, VerifyMode::both), "y = " << y);
  }
  CHECK(passes(five_term(Complex(0.3, 0.4), Complex(-2, 0)), 2, VerifyMode::numeric));
}

TEST_CASE("five-term is symmetric in x and y numerically") {
  VerifyOptions o;
  const double a = relation_residual(five_term(Complex(0.3, 0.4), Complex(-2, 1)), 2, o);
  const double b = relation_residual(five_term(Complex(-2, 1), Complex(0.3, 0.4)), 2, o);
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("auxiliary relations") {
  for (const auto kind : {AuxKind::inversion, AuxKind::one_minus, AuxKind::duplication}) {
    CHECK(passes(aux_relation(kind, E("t")), 2, VerifyMode::both));
    CHECK(passes(aux_relation(kind, Complex(0.3, 0.7)), 2, VerifyMode::numeric));
  }
  VerifyOptions o;
  CHECK(relation_residual(aux_relation(AuxKind::one_minus, Complex(0.3, 0)), 2, o) == 0.0);
  CHECK(relation_residual(aux_relation(AuxKind::inversion, Complex(2, 0)), 2, o) < 1e-12);
}

TEST_CASE("22-term relation") {
  CHECK(passes(goncharov_22(E("2"), E("3"), E("5")), 3, VerifyMode::numeric));
  CHECK(passes(goncharov_22(E("t"), E("2"), E("3")), 3, VerifyMode::both));
  CHECK(passes(goncharov_22(Complex(0.3, 1.1), Complex(-2, 0.5), Complex(4, -1)), 3, VerifyMode::numeric));
  CHECK(arg_strings(goncharov_22(E("2"), E("3"), E("5"))) == arg_strings(goncharov_22(E("3"), E("5"), E("2"))));
  CHECK_THROWS(goncharov_22(E("t"), E("t"), E("3")));
}

TEST_CASE("22-term relation at random rational triples") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  int tried = 0;
  while (tried < 20) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    FormalRelation r;
    try {
      r = goncharov_22(FieldElement::constant(a), FieldElement::constant(b), FieldElement::constant(c));
    } catch (const Error&) {
      continue;  // a degenerate triple
    }
    ++tried;
    CHECK(passes(r, 3, VerifyMode::numeric));
  }
}

TEST_CASE("a corrupted relation fails both ways") {
  auto r = five_term(E("t"), E("1/2"));
  r.coeffs[2] = 2;
  const auto v = verify_relation(r, 2, VerifyMode::both);
  CHECK_FALSE(v.pass);
  REQUIRE(v.children.size() == 2);
  CHECK_FALSE(v.children[0].pass);
  CHECK_FALSE(v.children[1].pass);
}

TEST_CASE("generator strings") {
  CHECK(parse_relation_generator("five_term(x=t, y=1/2)").size() == 5);
  CHECK(parse_relation_generator("goncharov22(a1=t,a2=2,a3=3)").weight == 3);
  CHECK(parse_relation_generator("inversion(x=t)").size() == 2);
  CHECK_THROWS(parse_relation_generator("seven_term(x=t)"));
  CHECK_THROWS(parse_relation_generator("five_term(x=t)"));
}
