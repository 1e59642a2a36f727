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

#include "polyreg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

namespace polyreg {

// ---------------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------------

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  Integer y = 2 + seed, c = 1 + seed, m = 64, g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Integer& v) {
    Integer t = v * v + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < std::min<Integer>(m, r - k); ++i) {
        y = f(y);
        Integer d = abs(x - y);
        q = (q * d) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_composite(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 1;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      split_composite(d, out);
      split_composite(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n0) {
  if (n0 == 0) throw Error("factor", "cannot factor zero");
  Integer n = abs(n0);
  std::map<Integer, int> out;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  split_composite(n, out);
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p < 2^31
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

  ModPoly sub(ModPoly a, const ModPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  ModPoly add(ModPoly a, const ModPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = add(a[i], b[i]);
    trim(a);
    return a;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  ModPoly scale(ModPoly a, u64 c) const {
    for (auto& x : a) x = mul(x, c);
    trim(a);
    return a;
  }
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ModPoly q(static_cast<std::size_t>(deg(a) - db) + 1, 0);
    const u64 inv_lc = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      const u64 c = mul(a[static_cast<std::size_t>(i)], inv_lc);
      if (c == 0) continue;
      q[static_cast<std::size_t>(i - db)] = c;
      for (int j = 0; j <= db; ++j) {
        auto& slot = a[static_cast<std::size_t>(i - db + j)];
        slot = sub(slot, mul(c, b[static_cast<std::size_t>(j)]));
      }
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    return scale(std::move(a), inv(a.back()));
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }
  // s*a + t*b = 1 for coprime a, b.
  void bezout(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant.
    const u64 c = inv(r0[0]);
    s = scale(s0, c);
    t = scale(t0, c);
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
};

ModPoly reduce(const std::vector<Integer>& f, u64 p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c = f[i] % static_cast<unsigned long>(p);
    if (c < 0) c += static_cast<unsigned long>(p);
    r[i] = c.get_ui();
  }
  Zp::trim(r);
  return r;
}

// Equal-degree splitting of a product of distinct monic irreducibles of degree d.
void equal_degree(const Zp& F, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (Zp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(Zp::deg(g)));
    for (auto& c : a) c = dist(rng);
    Zp::trim(a);
    if (Zp::deg(a) < 1) continue;
    ModPoly b = F.sub(F.powmod(a, e, g), ModPoly{1});
    ModPoly h = F.gcd(g, b);
    if (Zp::deg(h) > 0 && Zp::deg(h) < Zp::deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod p.
std::vector<ModPoly> factor_mod_p(const Zp& F, ModPoly f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed5eedULL);
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int i = 1; Zp::deg(f) >= 2 * i; ++i) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (Zp::deg(g) > 0) {
      equal_degree(F, g, i, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (Zp::deg(f) > 0) out.push_back(F.monic(f));
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials and Hensel lifting
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Integer symmetric_mod(const Integer& c, const Integer& m) {
  Integer r = c % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ZPoly symmetric_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) c = symmetric_mod(c, m);
  trim(a);
  return a;
}

ZPoly lift_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

// Given f == g*h (mod p) with g monic and gcd(g, h) = 1 mod p, returns (g, h)
// with f == g*h (mod modulus), g monic.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, ZPoly g, ZPoly h, const Zp& F, const Integer& modulus) {
  ModPoly gb = reduce(g, F.p), hb = reduce(h, F.p), s, t;
  F.bezout(gb, hb, s, t);
  Integer m = static_cast<unsigned long>(F.p);
  while (m < modulus) {
    ZPoly e = zsub(f, zmul(g, h));
    for (auto& c : e) c /= m;  // exact: f == g*h mod m
    ModPoly eb = reduce(e, F.p);
    auto [q, dg] = F.divmod(F.mul(t, eb), gb);
    ModPoly dh = F.add(F.mul(s, eb), F.mul(q, hb));
    ZPoly dgz = lift_mod(dg), dhz = lift_mod(dh);
    if (g.size() < dgz.size()) g.resize(dgz.size(), Integer(0));
    for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += m * dgz[i];
    if (h.size() < dhz.size()) h.resize(dhz.size(), Integer(0));
    for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
    m *= static_cast<unsigned long>(F.p);
  }
  return {symmetric_mod(g, modulus), symmetric_mod(h, modulus)};
}

std::vector<ZPoly> hensel_all(const ZPoly& f, const std::vector<ModPoly>& ubar, const Zp& F, const Integer& modulus) {
  std::vector<ZPoly> lifted;
  ZPoly current = f;
  for (std::size_t i = 0; i + 1 < ubar.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < ubar.size(); ++j) rest = F.mul(rest, ubar[j]);
    const ModPoly lc_mod = reduce(ZPoly{current.back()}, F.p);
    rest = F.scale(rest, lc_mod[0]);
    auto [g, h] = hensel_pair(current, lift_mod(ubar[i]), lift_mod(rest), F, modulus);
    lifted.push_back(std::move(g));
    current = std::move(h);
  }
  // The last factor: make current monic modulo the modulus.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), current.back().get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : current) c *= lc_inv;
  lifted.push_back(symmetric_mod(current, modulus));
  return lifted;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

ZPoly to_primitive_integer(const Polynomial& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (const auto& c : f.coeffs()) {
    Rational v = c * den;
    r.push_back(v.get_num());
  }
  return primitive_part(std::move(r));
}

Polynomial to_monic_rational(const ZPoly& a) {
  std::vector<Rational> v;
  for (const auto& c : a) v.emplace_back(c);
  return Polynomial(std::move(v)).monic();
}

bool small_prime(unsigned long p) {
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Choose a good prime: lc not divisible, f mod p squarefree; among the
  // first few candidates prefer the fewest modular factors.
  std::vector<ModPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (unsigned long p = 3; tried < 6 && p < 100000; p += 2) {
    if (!small_prime(p)) continue;
    if (f.back() % p == 0) continue;
    Zp F{p};
    ModPoly fb = reduce(f, p);
    if (Zp::deg(F.gcd(fb, F.derivative(fb))) != 0) continue;
    ++tried;
    auto facs = factor_mod_p(F, F.monic(fb));
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};

  Zp F{best_p};
  // Coefficient bound for factors of lc * f.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus <= 2 * bound) modulus *= static_cast<unsigned long>(best_p);

  std::vector<ZPoly> u = hensel_all(f, best, F, modulus);

  std::vector<ZPoly> result;
  std::vector<std::size_t> T(u.size());
  for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
  ZPoly fstar = f;
  Integer b = f.back();
  std::size_t s = 1;
  while (2 * s <= T.size()) {
    bool found = false;
    std::vector<bool> mask(T.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      ZPoly g{b}, h{b};
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (mask[i]) g = symmetric_mod(zmul(g, u[T[i]]), modulus);
        else h = symmetric_mod(zmul(h, u[T[i]]), modulus);
      }
      ZPoly bf = fstar;
      for (auto& c : bf) c *= b;
      if (zmul(g, h) == bf) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < T.size(); ++i)
          if (!mask[i]) rest.push_back(T[i]);
        T = std::move(rest);
        result.push_back(primitive_part(g));
        fstar = primitive_part(h);
        b = fstar.back();
        found = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++s;
  }
  result.push_back(fstar);
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f0) {
  if (f0.is_zero()) throw Error("factor", "squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial f = f0.monic();
  if (f.degree() == 0) return out;
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = f.divmod(a).first;
  Polynomial c = fp.divmod(a).first;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial ai = gcd(b, d);
    b = b.divmod(ai).first;
    c = d.divmod(ai).first;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai, i);
  }
  return out;
}

Factorization factor_over_q(const Polynomial& f) {
  if (f.is_zero()) throw Error("factor", "cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.leading();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : zassenhaus(to_primitive_integer(part))) {
      out.factors.emplace_back(to_monic_rational(z), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (f.is_zero() || f.degree() < 1) return false;
  auto fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace polyreg
