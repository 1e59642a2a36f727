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

#include "polyreg/polylog.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace polyreg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBernoulliMax = 240;
constexpr int kZetaMax = 64;
constexpr int kMaxOrder = 24;    // largest k supported by the log expansion table
constexpr int kMaxTerms = 220;   // length of the log expansion

Complex i_power(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Rational factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

// zeta(k - j) / j! for the expansion of Li_k around z = 1.
struct LogExpansionTable {
  std::array<std::array<double, kMaxTerms>, kMaxOrder + 1> c{};

  LogExpansionTable() {
    const auto& K = ConstantsTable::instance();
    for (int k = 1; k <= kMaxOrder; ++k) {
      for (int j = 0; j < kMaxTerms; ++j) {
        const int s = k - j;
        if (s == 1) continue;
        if (s <= 0) {
          c[k][j] = Rational(K.zeta_nonpositive(s) / factorial(j)).get_d();
        } else {
          c[k][j] = K.zeta(s) / factorial(j).get_d();
        }
      }
    }
  }
};

const LogExpansionTable& log_table() {
  static const LogExpansionTable table;
  return table;
}

Complex li_series(int k, Complex z) {
  const double r = std::abs(z);
  const double stop = 1e-17 / (1.0 - r);
  Complex sum = 0.0, zm = z;
  for (int m = 1; m < 10000; ++m) {
    const double denom = std::pow(static_cast<double>(m), k);
    sum += zm / denom;
    if (std::abs(zm) / denom < stop) break;
    zm *= z;
  }
  return sum;
}

Complex li_log_expansion(int k, Complex z) {
  if (k > kMaxOrder) throw Error("range", "Li_k log expansion supports k <= " + std::to_string(kMaxOrder));
  const auto& c = log_table().c[k];
  const Complex w = std::log(z);
  double harmonic = 0.0;
  for (int i = 1; i < k; ++i) harmonic += 1.0 / i;
  Complex wj = 1.0;
  Complex sum = 0.0;
  int small = 0;
  for (int j = 0; j < kMaxTerms; ++j) {
    if (j == k - 1) {
      sum += (harmonic - std::log(-w)) * wj / factorial(k - 1).get_d();
    } else if (c[j] != 0.0) {
      const Complex term = c[j] * wj;
      sum += term;
      if (j > k && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
    wj *= w;
  }
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// Values and constants
// ---------------------------------------------------------------------------

Complex PolylogValue::value() const { return coeff * i_power(twist); }

PolylogValue& PolylogValue::operator+=(const PolylogValue& o) {
  if (twist != o.twist) throw Error("twist", "adding values of different twist");
  coeff += o.coeff;
  degraded = degraded || o.degraded;
  return *this;
}

namespace {

// Euler-Maclaurin with N = 12 and twelve correction terms.
double em_zeta(int s, const std::vector<Rational>& bernoulli) {
  constexpr int N = 12;
  constexpr int M = 12;
  long double sum = 0.0L;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double Nl = N;
  sum += std::pow(Nl, 1 - s) / (s - 1);
  sum += std::pow(Nl, -s) / 2;
  long double rising = s;  // s(s+1)...(s+2j-2)
  for (int j = 1; j <= M; ++j) {
    const long double b = Rational(bernoulli[static_cast<std::size_t>(2 * j)] / factorial(2 * j)).get_d();
    sum += b * rising * std::pow(Nl, -s - 2 * j + 1);
    rising *= static_cast<long double>(s + 2 * j - 1) * (s + 2 * j);
  }
  return static_cast<double>(sum);
}

}  // namespace

double zeta_euler_maclaurin(int s) {
  if (s < 2) throw Error("domain", "zeta_euler_maclaurin needs s >= 2");
  std::vector<Rational> b(2 * 12 + 1);
  for (int k = 0; k <= 24; ++k) b[static_cast<std::size_t>(k)] = ConstantsTable::instance().bernoulli(k);
  return em_zeta(s, b);
}

ConstantsTable::ConstantsTable() {
  bernoulli_.resize(kBernoulliMax + 1);
  bernoulli_[0] = 1;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  for (int m = 1; m <= kBernoulliMax; ++m) {
    if (m > 1 && m % 2 == 1) {
      bernoulli_[m] = 0;
      continue;
    }
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += binom * bernoulli_[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    bernoulli_[m] = -acc / (m + 1);
  }
  zeta_.assign(kZetaMax + 1, 0.0);
  for (int s = 2; s <= kZetaMax; ++s) zeta_[static_cast<std::size_t>(s)] = em_zeta(s, bernoulli_);
}

const ConstantsTable& ConstantsTable::instance() {
  static const ConstantsTable table;
  return table;
}

const Rational& ConstantsTable::bernoulli(int k) const {
  if (k < 0 || k > max_index()) throw Error("range", "Bernoulli index out of range: " + std::to_string(k));
  return bernoulli_[static_cast<std::size_t>(k)];
}

Rational ConstantsTable::zeta_nonpositive(int s) const {
  if (s > 0) throw Error("domain", "zeta_nonpositive needs s <= 0");
  if (s == 0) return Rational(-1, 2);
  const int m = -s;  // zeta(-m) = (-1)^m B_{m+1}/(m+1)
  Rational v = bernoulli(m + 1) / (m + 1);
  return m % 2 == 0 ? v : Rational(-v);
}

double ConstantsTable::zeta(int s) const {
  if (s == 1) throw Error("pole", "zeta has a pole at 1");
  if (s <= 0) return zeta_nonpositive(s).get_d();
  if (s > kZetaMax) return 1.0;
  return zeta_[static_cast<std::size_t>(s)];
}

Complex bernoulli_polynomial(int k, Complex x) {
  const auto& K = ConstantsTable::instance();
  Complex sum = 0.0;
  Integer binom = 1;
  for (int j = 0; j <= k; ++j) {
    if (K.bernoulli(j) != 0) sum += binom.get_d() * K.bernoulli(j).get_d() * std::pow(x, k - j);
    binom = binom * (k - j) / (j + 1);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Polylogarithms
// ---------------------------------------------------------------------------

bool near_one(Complex z) { return std::abs(z - 1.0) < 1e-8; }

Complex li(int k, Complex z) {
  if (k < 1) throw Error("domain", "li needs k >= 1");
  if (z == Complex(0.0, 0.0)) return 0.0;
  // On the cut (1, inf) take the principal value, the limit from below;
  // a signed zero would otherwise pick the side.
  if (z.imag() == 0.0) z = Complex(z.real(), -0.0);
  if (k == 1) {
    if (z == Complex(1.0, 0.0)) throw Error("pole", "Li_1 has a pole at z = 1");
    return -std::log(1.0 - z);
  }
  if (z == Complex(1.0, 0.0)) return ConstantsTable::instance().zeta(k);
  const double r = std::abs(z);
  if (r <= 0.5) return li_series(k, z);
  if (r < 2.0) return li_log_expansion(k, z);
  // Li_k(z) + (-1)^k Li_k(1/z) = -(2 pi i)^k / k! B_k(1/2 + log(-z)/(2 pi i))
  const Complex two_pi_i(0.0, 2.0 * kPi);
  const Complex rhs = -std::pow(two_pi_i, k) / factorial(k).get_d() *
                      bernoulli_polynomial(k, 0.5 + std::log(-z) / two_pi_i);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return rhs - sign * li_series(k, 1.0 / z);
}

PolylogValue project(Complex w, int m) {
  PolylogValue v;
  v.coeff = (w * i_power(-m)).real();
  v.twist = m;
  return v;
}

PolylogValue p_zag(int n, Complex z) {
  if (n < 1) throw Error("domain", "p_zag needs n >= 1");
  if (z == Complex(0.0, 0.0) || !std::isfinite(std::abs(z)))
    throw Error("domain", "P_Zag is singular at 0 and infinity");
  const double L = std::log(std::abs(z));
  Complex sum = 0.0;
  double c = 1.0;  // (-L)^k / k!
  for (int k = 0; k < n; ++k) {
    if (c != 0.0) sum += c * li(n - k, z);
    c *= -L / (k + 1);
  }
  PolylogValue v = project(sum, n - 1);
  v.degraded = near_one(z);
  return v;
}

PolylogValue p_mod(int n, Complex z) {
  if (n < 1) throw Error("domain", "p_mod needs n >= 1");
  PolylogValue zero;
  zero.twist = n - 1;
  if (z == Complex(0.0, 0.0) || !std::isfinite(std::abs(z))) return zero;
  if (z == Complex(1.0, 0.0)) {
    if (n == 1) throw Error("pole", "P_1 has a pole at z = 1");
    // Li_n(1) = zeta(n); the projection keeps P_n^mod continuous at 1.
    return project(Complex(ConstantsTable::instance().zeta(n), 0.0), n - 1);
  }
  if (std::abs(z) > 64.0) {
    // P_n(z) = -(-1)^n P_n(1/z)
    PolylogValue v = p_mod(n, 1.0 / z);
    if (n % 2 == 0) v.coeff = -v.coeff;
    return v;
  }
  const auto& K = ConstantsTable::instance();
  const double L = std::log(std::abs(z));
  Complex sum = 0.0;
  double c = 1.0;  // 2^k L^k / k!
  for (int k = 0; k < n; ++k) {
    const double b = K.bernoulli(k).get_d();
    if (c != 0.0 && b != 0.0) sum += b * c * li(n - k, z);
    c *= 2.0 * L / (k + 1);
  }
  PolylogValue v = project(sum, n - 1);
  v.degraded = near_one(z);
  return v;
}

double bloch_wigner(Complex z) { return p_mod(2, z).coeff; }

std::vector<PolylogValue> nf_regulator(int n, const std::vector<double>& coeffs,
                                       const std::vector<std::vector<Complex>>& values, bool include_factor,
                                       int sign) {
  if (coeffs.size() != values.size()) throw Error("shape", "nf_regulator: coefficient/value count mismatch");
  const std::size_t m = values.empty() ? 0 : values.front().size();
  double factor = sign;
  if (include_factor)
    for (int k = 2; k < n; ++k) factor *= k;
  std::vector<PolylogValue> out(m);
  for (auto& v : out) v.twist = n - 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != m) throw Error("shape", "nf_regulator: ragged embedding values");
    for (std::size_t s = 0; s < m; ++s) out[s] += (factor * coeffs[i]) * p_mod(n, values[i][s]);
  }
  return out;
}

std::vector<PolylogValue> nf_regulator(int n, const std::vector<std::pair<Rational, FieldElement>>& combination,
                                       const Place& x, bool include_factor, int sign) {
  std::vector<double> coeffs;
  std::vector<std::vector<Complex>> values;
  for (const auto& [c, y] : combination) {
    coeffs.push_back(c.get_d());
    values.push_back(specialize_numeric(y, x));
  }
  if (values.empty()) {
    std::vector<PolylogValue> zeros(static_cast<std::size_t>(x.degree()));
    for (auto& v : zeros) v.twist = n - 1;
    return zeros;
  }
  return nf_regulator(n, coeffs, values, include_factor, sign);
}

}  // namespace polyreg
