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

#include <cmath>
#include <random>
#include <sstream>

#include "polyreg/polylog.hpp"
#include "polyreg/symbols.hpp"

namespace polyreg {

namespace {

using Tensor2 = std::map<std::pair<Generator, Generator>, Rational>;

void add_coords(Coordinates& acc, const Coordinates& x, const Rational& a) {
  if (a == 0) return;
  for (const auto& [g, e] : x) {
    Rational& slot = acc[g];
    slot += a * e;
    if (slot == 0) acc.erase(g);
  }
}

void add_tensor(Tensor2& acc, const Coordinates& x, const Coordinates& y, const Rational& a) {
  if (a == 0) return;
  for (const auto& [g, e] : x)
    for (const auto& [h, f] : y) {
      Rational& slot = acc[{g, h}];
      slot += a * e * f;
      if (slot == 0) acc.erase({g, h});
    }
}

std::string coords_string(const Coordinates& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [g, e] : c) s += (s.empty() ? "" : ", ") + g.to_string() + ": " + e.get_str();
  return "{" + s + "}";
}

Verdict child(const std::string& name, bool pass, const std::string& computed) {
  Verdict v;
  v.name = name;
  v.pass = pass;
  v.claimed = "0";
  v.computed = computed;
  v.mode = "strict";
  return v;
}

// Sample points for the numeric weight-2 fallback.
std::vector<Complex> sample_points(std::size_t count) {
  std::mt19937_64 rng(20260418);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Complex> out;
  while (out.size() < count) out.emplace_back(u(rng), u(rng));
  return out;
}

}  // namespace

Verdict identity_suite(const ChainElement& e0) {
  Verdict suite;
  suite.name = "identity_suite";
  suite.pass = true;
  if (e0.weight() != 4 || e0.degree() != 2) {
    suite.pass = false;
    suite.details.push_back("the suite needs a weight-4 degree-2 element");
    return suite;
  }
  const bool tilde = e0.variant() == Variant::Mtilde;
  const ChainElement e = tilde ? normalize(e0) : e0;
  const SymbolBasis b = extract_basis(e);
  const std::size_t J = b.c.size();
  const std::size_t l = b.generators.size();
  suite.details.push_back(std::to_string(J) + " terms, " + std::to_string(l) + " basis elements");

  // sum c_j [f_j]_2 (x) f_j ^ g_j = 0
  {
    ChainElement d = differential(e);
    if (tilde) d = normalize(d);
    suite.children.push_back(child("c_j [f_j]_2 (x) f_j ^ g_j = 0", d.is_zero(), d.to_string()));
  }

  std::vector<Coordinates> one_minus_f(J), fc(J), gc(J);
  for (std::size_t j = 0; j < J; ++j) {
    one_minus_f[j] = b.f[j].one_minus().coordinates();
    fc[j] = b.f[j].coordinates();
    gc[j] = Coordinates{{b.g[j], Rational(1)}};
  }

  // sum_j c_j s_kj (s_aj t_bj - s_bj t_aj) (1 - f_j) = 0 for all k, a < b
  {
    bool ok = true;
    std::string bad;
    for (std::size_t k = 0; k < l && ok; ++k)
      for (std::size_t a = 0; a < l && ok; ++a)
        for (std::size_t c = a + 1; c < l && ok; ++c) {
          Coordinates acc;
          for (std::size_t j = 0; j < J; ++j) {
            const Rational w = b.c[j] * b.s[k][j] * (b.s[a][j] * b.tmat[c][j] - b.s[c][j] * b.tmat[a][j]);
            add_coords(acc, one_minus_f[j], w);
          }
          if (!acc.empty()) {
            ok = false;
            bad = "k=" + std::to_string(k + 1) + " (" + std::to_string(a + 1) + "," + std::to_string(c + 1) +
                  "): " + coords_string(acc);
          }
        }
    suite.children.push_back(child("c_j s_kj (f_j (x) g_j - g_j (x) f_j) (1 - f_j) = 0", ok, ok ? "0" : bad));
  }

  // sum c_j s_kj s_lj (1-f_j) (x) g_j = sum c_j s_kj t_lj (1-f_j) (x) f_j
  {
    bool ok = true;
    std::string bad;
    for (std::size_t k = 0; k < l && ok; ++k)
      for (std::size_t m = 0; m < l && ok; ++m) {
        Tensor2 acc;
        for (std::size_t j = 0; j < J; ++j) {
          add_tensor(acc, one_minus_f[j], gc[j], b.c[j] * b.s[k][j] * b.s[m][j]);
          add_tensor(acc, one_minus_f[j], fc[j], -b.c[j] * b.s[k][j] * b.tmat[m][j]);
        }
        if (!acc.empty()) {
          ok = false;
          bad = "k=" + std::to_string(k + 1) + ", l=" + std::to_string(m + 1) + ": " +
                std::to_string(acc.size()) + " nonzero entries";
        }
      }
    suite.children.push_back(
        child("c_j s_kj s_lj (1 - f_j) (x) g_j = c_j s_kj t_lj (1 - f_j) (x) f_j", ok, ok ? "0" : bad));
  }

  // X_kl = sum c_j s_kj t_lj [f_j]_2 is symmetric in k, l
  {
    Verdict v = child("c_j s_kj t_lj [f_j]_2 symmetric in k, l", true, "0");
    v.mode = "formal";
    const auto points = sample_points(50);
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t m = k + 1; m < l; ++m) {
        ChainElement x(2, 1, Variant::Mtilde);
        for (std::size_t j = 0; j < J; ++j) {
          const Rational w = b.c[j] * (b.s[k][j] * b.tmat[m][j] - b.s[m][j] * b.tmat[k][j]);
          if (w != 0) x.add(BasisKey{2, b.f[j], Generator(), {}}, w);
        }
        x = normalize(x);
        if (x.is_zero()) continue;
        // Not formally zero: fall back to sampling P_2^mod.
        double worst = 0.0;
        for (const Complex& z : points) {
          double s = 0.0;
          try {
            for (const auto& [key, c] : x.terms()) s += c.get_d() * p_mod(2, key.arg.evaluate_principal(z)).coeff;
          } catch (const Error&) {
            continue;
          }
          worst = std::max(worst, std::abs(s));
        }
        v.mode = "numeric";
        v.tolerance = 1e-8;
        v.residual = std::isnan(v.residual) ? worst : std::max(v.residual, worst);
        v.details.push_back("k=" + std::to_string(k + 1) + ", l=" + std::to_string(m + 1) +
                            ": formal difference " + x.to_string());
        if (worst > 1e-8) v.pass = false;
      }
    if (v.mode == "numeric") {
      std::ostringstream os;
      os << v.residual;
      v.computed = os.str();
    }
    suite.children.push_back(std::move(v));
  }

  // Weight-reduced form: sum c_j s_kj [f_j]_{m-1} (x) g_j = d(sum c_j t_kj [f_j]_m)
  {
    bool ok = true;
    std::string bad;
    const int m = b.order;
    for (std::size_t k = 0; k < l && ok; ++k) {
      ChainElement lhs(m, 2, e.variant());
      ChainElement top(m, 1, e.variant());
      for (std::size_t j = 0; j < J; ++j) {
        lhs.add(BasisKey{m - 1, b.f[j], Generator(), {b.g[j]}}, b.c[j] * b.s[k][j]);
        top.add(BasisKey{m, b.f[j], Generator(), {}}, b.c[j] * b.tmat[k][j]);
      }
      ChainElement diff = lhs - differential(top);
      if (tilde) diff = normalize(diff);
      if (!diff.is_zero()) {
        ok = false;
        bad = "k=" + std::to_string(k + 1) + ": " + diff.to_string();
      }
    }
    suite.children.push_back(child("c_j s_kj [f_j]_{m-1} (x) g_j - d(c_j t_kj [f_j]_m) = 0", ok, ok ? "0" : bad));
  }

  suite.absorb_children();
  suite.mode = "strict";
  return suite;
}

}  // namespace polyreg
