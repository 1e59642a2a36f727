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

#include <cmath>
#include <random>

#include "polyreg/expr.hpp"
#include "polyreg/polylog.hpp"

using namespace polyreg;

namespace {

struct OracleRow {
  int n;
  double re, im, pmod, pzag;
};
struct LiRow {
  int k;
  double re, im, li_re, li_im;
};
#include "oracle_values.inc"

constexpr double kCatalan = 0.91596559417721901505;

Complex random_annulus(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> lr(std::log(rmin), std::log(rmax)), th(-M_PI, M_PI);
  return std::polar(std::exp(lr(rng)), th(rng));
}

}  // namespace

TEST_CASE("constants") {
  const auto& c = ConstantsTable::instance();
  CHECK(c.bernoulli(0) == 1);
  CHECK(c.bernoulli(1) == Rational(-1, 2));
  CHECK(c.bernoulli(2) == Rational(1, 6));
  CHECK(c.bernoulli(3) == 0);
  CHECK(c.bernoulli(12) == Rational(-691, 2730));
  CHECK(c.zeta(2) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-15));
  CHECK(c.zeta(3) == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
  CHECK(c.zeta(4) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-15));
}

TEST_CASE("Li_k against the mpmath oracle") {
  for (const auto& r : kLiOracle) {
    const Complex z(r.re, r.im);
    const Complex v = li(r.k, z);
    CHECK_MESSAGE(std::abs(v - Complex(r.li_re, r.li_im)) < 1e-11 * std::max(1.0, std::abs(v)),
                  "k=" << r.k << " z=" << format_complex(z));
  }
  CHECK(std::abs(li(2, 0.0)) == 0.0);
  CHECK(li(2, 1.0).real() == doctest::Approx(1.6449340668482264).epsilon(1e-14));
  CHECK(li(1, 0.5).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS(li(1, 1.0));
}

TEST_CASE("P^mod and P_Zag against the mpmath oracle") {
  for (const auto& r : kPolylogOracle) {
    const Complex z(r.re, r.im);
    CHECK_MESSAGE(std::abs(p_mod(r.n, z).coeff - r.pmod) < 1e-11, "n=" << r.n << " z=" << format_complex(z));
    CHECK_MESSAGE(std::abs(p_zag(r.n, z).coeff - r.pzag) < 1e-11, "n=" << r.n << " z=" << format_complex(z));
    CHECK(p_mod(r.n, z).twist == r.n - 1);
  }
}

TEST_CASE("special values") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(p_mod(n, 0.0).coeff == 0.0);
    CHECK(p_mod(n, Complex(INFINITY, 0)).coeff == 0.0);
  }
  const auto c = p_mod(2, Complex(0, 1));
  CHECK(c.twist == 1);
  CHECK(c.coeff == doctest::Approx(kCatalan).epsilon(1e-14));
  CHECK(std::abs(p_mod(2, 0.3).coeff) < 1e-16);
  CHECK(std::abs(p_mod(2, 1.0).coeff) < 1e-16);
  // continuous at 1: pi_2(zeta(3)) has coefficient -zeta(3)
  CHECK(p_mod(3, 1.0).coeff == doctest::Approx(-1.2020569031595942).epsilon(1e-14));
  CHECK(p_mod(3, Complex(1 + 1e-7, 1e-7)).coeff == doctest::Approx(-1.2020569031595942).epsilon(1e-5));
  CHECK(p_zag(1, Complex(0.3, 0.4)).coeff == doctest::Approx(-std::log(std::abs(Complex(0.7, -0.4)))));
  CHECK_THROWS(p_zag(2, 0.0));
  CHECK(project(Complex(3, 4), 0).coeff == 3);
  CHECK(project(Complex(3, 4), 1).coeff == 4);
}

TEST_CASE("inversion and conjugation") {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 5; ++n) {
    double worst = 0, worst_conj = 0;
    for (int i = 0; i < 300; ++i) {
      const Complex z = random_annulus(rng, 0.05, 20);
      const double s = (n % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(p_mod(n, z).coeff + s * p_mod(n, 1.0 / z).coeff));
      worst_conj = std::max(worst_conj, std::abs(p_mod(n, std::conj(z)).coeff + s * p_mod(n, z).coeff));
    }
    CHECK(worst < 1e-10);
    CHECK(worst_conj < 1e-12);
  }
}

TEST_CASE("continuity across the cut") {
  for (int n = 2; n <= 5; ++n)
    for (double x = 1.2; x < 10; x += 0.7) {
      const double a = p_mod(n, Complex(x, 1e-9)).coeff, b = p_mod(n, Complex(x, -1e-9)).coeff;
      CHECK(std::abs(a - b) < 1e-8);
    }
}

TEST_CASE("Zag and mod versions") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Complex z = random_annulus(rng, 0.05, 20);
    CHECK(std::abs(p_zag(2, z).coeff - p_mod(2, z).coeff) < 1e-12);
    const double L = std::log(std::abs(z));
    // as complex values; the coefficients of i^2 carry the opposite sign
    CHECK(std::abs(p_zag(3, z).value() - p_mod(3, z).value() + L * L / 6 * std::log(std::abs(1.0 - z))) < 1e-10);
    for (int n = 2; n <= 5; ++n) {
      Complex s = 0;
      double fact = 1;
      for (int j = 0; 2 * j < n; ++j) {
        if (j > 0) fact *= (2 * j) * (2 * j + 1);
        s += std::pow(L, 2 * j) / fact * p_mod(n - 2 * j, z).value();
      }
      CHECK(std::abs(p_zag(n, z).value() - s) < 1e-10);
    }
  }
}

TEST_CASE("Bloch-Wigner five-term") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 100; ++i) {
    const Complex x(u(rng), u(rng)), y(u(rng), u(rng));
    const Complex one(1, 0);
    const double s = bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((one - x) / (one - x * y)) +
                     bloch_wigner(one - x * y) + bloch_wigner((one - y) / (one - x * y));
    CHECK(std::abs(s) < 1e-9);
  }
}

TEST_CASE("number field regulator oracle") {
  const std::vector<std::vector<Complex>> vals = {{Complex(3, 0)}, {Complex(3, 0)}};
  const auto z = nf_regulator(2, {1.0, -1.0}, vals, false);
  REQUIRE(z.size() == 1);
  CHECK(z[0].coeff == 0.0);
  const Complex x(2, 1);
  const auto inv = nf_regulator(2, {1.0, 1.0}, {{x}, {1.0 / x}}, true);
  CHECK(std::abs(inv[0].coeff) < 1e-12);
  const auto refl = nf_regulator(2, {1.0, 1.0}, {{0.3}, {0.7}}, false);
  CHECK(std::abs(refl[0].coeff) < 1e-15);
}
