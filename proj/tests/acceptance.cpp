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

// Acceptance run: one PASS/FAIL line per criterion, at the stated
// tolerances, plus a few supporting lines. Exit status is the number of
// failing criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "polyreg/expr.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/regulator.hpp"
#include "polyreg/relations.hpp"
#include "polyreg/symbols.hpp"

using namespace polyreg;

namespace {

const Complex I(0, 1);

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

FieldElement E(const char* s) { return parse_expr(s); }

SymbolTerm term(Rational c, int order, const FieldElement& f, const FieldElement& g) {
  SymbolTerm t;
  t.coeff = c;
  t.order = order;
  t.arg = f;
  t.wedge = {g};
  return t;
}

ChainElement chain(int weight, const std::vector<SymbolTerm>& ts) {
  return ChainElement::from_terms(weight, 2, Variant::Mtilde, ts);
}

Complex annulus(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> lr(std::log(rmin), std::log(rmax)), th(-M_PI, M_PI);
  return std::polar(std::exp(lr(rng)), th(rng));
}

// Points kept away from 0 and 1 (and far out), where several checks are singular.
Complex generic_point(std::mt19937_64& rng) {
  for (;;) {
    const Complex z = annulus(rng, 0.05, 20);
    if (std::abs(z - 1.0) > 0.05) return z;
  }
}

FieldElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> root(-4, 4), expo(-2, 2), count(1, 3), kind(0, 3);
  FieldElement f = FieldElement::constant(Rational(std::uniform_int_distribution<int>(1, 6)(rng)));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const int r = root(rng);
    Polynomial p = kind(rng) == 0 ? Polynomial{Rational(1 + r * r), 0, 1} : Polynomial::linear_root(Rational(r));
    int e = expo(rng);
    f = f * FieldElement::from_polynomial(p).pow(e == 0 ? 1 : e);
  }
  return f;
}

// ---------------------------------------------------------------------------

Outcome inversion_equation() {
  std::mt19937_64 rng(101);
  double worst = 0;
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < 1000; ++i) {
      const Complex z = annulus(rng, 0.05, 20);
      const double s = n % 2 == 0 ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(p_mod(n, z).coeff + s * p_mod(n, 1.0 / z).coeff));
    }
  return {worst < 1e-10, "max |P_n(z) + (-1)^n P_n(1/z)| = " + sci(worst) + " (tol 1e-10, n = 2..5, 1000 points)", {}};
}

Outcome zag_mod_p3() {
  std::mt19937_64 rng(102);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex z = generic_point(rng);
    const double L = std::log(std::abs(z));
    worst = std::max(worst, std::abs(p_zag(3, z).value() - p_mod(3, z).value() + L * L / 6 * std::log(std::abs(1.0 - z))));
  }
  return {worst < 1e-10, "max |P_3,Zag - P_3^mod + log^2|z| log|1-z|/6| = " + sci(worst) + " (tol 1e-10, 500 points)", {}};
}

Outcome zag_expansion() {
  std::mt19937_64 rng(103);
  double worst = 0;
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < 500; ++i) {
      const Complex z = generic_point(rng);
      const double L = std::log(std::abs(z));
      Complex s = 0;
      double fact = 1;
      for (int j = 0; 2 * j < n; ++j) {
        if (j > 0) fact *= (2 * j) * (2 * j + 1);
        s += std::pow(L, 2 * j) / fact * p_mod(n - 2 * j, z).value();
      }
      worst = std::max(worst, std::abs(p_zag(n, z).value() - s));
    }
  return {worst < 1e-10, "max expansion residual = " + sci(worst) + " (tol 1e-10, n = 2..5, 500 points)", {}};
}

Outcome zag_differential() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 4; ++n) {
    const Verdict v = zag_differential_check(n, 50, 1e-5, 1e-5);
    o.pass = o.pass && v.pass;
    worst = std::max(worst, v.residual);
  }
  o.summary = "max relative error of central differences = " + sci(worst) + " (tol 1e-5, step 1e-5, n = 2,3,4)";
  return o;
}

Outcome five_term_relation() {
  Outcome o;
  for (const char* y : {"1/2", "t", "-3"}) {
    const Verdict v = verify_relation(five_term(E("t"), E(y)), 2, VerifyMode::symbolic);
    o.pass = o.pass && v.pass;
    o.notes.push_back(std::string("certificate (t, ") + y + "): " + (v.pass ? "exact zero" : "NONZERO"));
  }
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> u(-3, 3);
  VerifyOptions opt;
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex x(u(rng), u(rng)), y(u(rng), u(rng));
    worst = std::max(worst, relation_residual(five_term(x, y), 2, opt));
  }
  o.pass = o.pass && worst < 1e-9;
  double aux = 0;
  for (const auto kind : {AuxKind::inversion, AuxKind::one_minus, AuxKind::duplication}) {
    const Verdict v = verify_relation(aux_relation(kind, E("t")), 2, VerifyMode::symbolic);
    o.pass = o.pass && v.pass;
    for (int i = 0; i < 100; ++i) aux = std::max(aux, relation_residual(aux_relation(kind, Complex(u(rng), u(rng))), 2, opt));
  }
  o.pass = o.pass && aux < 1e-9;
  o.summary = "certificates exact; max |sum D| = " + sci(worst) + " over 500 pairs, auxiliary relations " + sci(aux) +
              " (tol 1e-9)";
  return o;
}

Outcome twentytwo_term() {
  std::mt19937_64 rng(106);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  VerifyOptions opt;
  double worst = 0;
  int done = 0, skipped = 0;
  while (done < 100) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    FormalRelation r;
    try {
      r = goncharov_22(FieldElement::constant(a), FieldElement::constant(b), FieldElement::constant(c));
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    worst = std::max(worst, relation_residual(r, 3, opt));
    ++done;
  }
  const Verdict s = verify_relation(goncharov_22(E("t"), E("2"), E("3")), 3, VerifyMode::symbolic);
  Outcome o{worst < 1e-8 && s.pass,
            "max |sum c_i P_3^mod| = " + sci(worst) + " over 100 rational triples (tol 1e-8); certificate at (t,2,3) " +
                (s.pass ? "exact zero" : "NONZERO"),
            {}};
  o.notes.push_back(std::to_string(skipped) + " degenerate triples redrawn");
  return o;
}

Outcome constancy() {
  const auto five = five_term(E("t"), E("1/2")).terms();
  const auto g22 = goncharov_22(E("t"), E("2"), E("3")).terms();
  const Verdict a = constancy_check(five, 2, 100, 1e-8);
  const Verdict b = constancy_check(g22, 3, 100, 1e-8);
  double da = a.children.size() > 1 ? a.children[1].residual : NAN;
  double db = b.children.size() > 1 ? b.children[1].residual : NAN;
  return {a.pass && b.pass,
          "max deviation: five-term family n=2 " + sci(da) + ", 22-term family n=3 " + sci(db) + " (tol 1e-8)", {}};
}

Outcome standard_integrals() {
  const auto t0 = std::chrono::steady_clock::now();
  StandardIntegralOptions loose;  // relative 1e-3
  const Verdict a = standard_integral(StandardIntegral::diarg_dlog, 2.0, loose);
  const Verdict b = standard_integral(StandardIntegral::diarg_diarg, 2.0, loose);
  StandardIntegralOptions tight;
  tight.rel_tol = 1e-6;
  const Verdict c = standard_integral(StandardIntegral::bump, 0.0, tight);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o{a.pass && b.pass && c.pass && secs < 60,
            "2 pi i log 2: rel err " + sci(a.residual / (2 * M_PI * std::log(2.0))) + "; diarg^diarg: " +
                sci(b.residual) + " (abs tol " + sci(1e-3 * 4 * M_PI * M_PI) + "); bump: " + sci(c.residual / (2 * M_PI)) +
                " rel; " + sci(secs) + " s",
            {}};
  for (const auto w : {StandardIntegral::dlog_diarg, StandardIntegral::dlog_dlog, StandardIntegral::dlogsq_dlogbar,
                       StandardIntegral::dh}) {
    const Verdict v = standard_integral(w, 2.0, loose);
    o.notes.push_back("(also) " + to_string(w) + ": " + (v.pass ? "pass" : "fail") + ", residual " + sci(v.residual));
  }
  return o;
}

Outcome boundary_residues() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  ContourSpec spec;
  spec.place = Place::rational(3);

  const auto e1 = chain(4, {term(1, 3, E("t"), E("t-3"))});
  const Complex r1 = contour_residue(e1, spec).residue;
  const double pred = 6 * p_mod(3, 3.0).coeff;  // -6 P_3^mod(3) i^2
  const double rel1 = std::abs(r1 - pred) / std::abs(pred);
  o.pass = o.pass && rel1 < 1e-4;

  spec.place = Place::rational(0);
  const auto e2 = chain(4, {term(1, 3, E("t"), E("t"))});
  const double r2 = std::abs(contour_residue(e2, spec).residue);
  o.pass = o.pass && r2 < 1e-6 && boundary(e2, Place::rational(0)).is_zero();

  spec.place = Place::rational(3);
  const auto e3 = chain(4, {term(1, 3, E("t"), E("t-3")), term(1, 3, E("1/t"), E("t/(t-3)"))});
  const double r3 = std::abs(contour_residue(e3, spec).residue);
  o.pass = o.pass && r3 < 1e-4;

  BoundaryOptions five;
  five.factor = 5;
  five.tol = 1e-4;
  const bool neg = verify_boundary(e1, Place::rational(3), five).pass;
  o.pass = o.pass && !neg;
  BoundaryOptions six;
  six.tol = 1e-4;
  o.pass = o.pass && verify_boundary(e1, Place::rational(3), six).pass;

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.pass = o.pass && secs < 60;
  o.summary = "[t]_3(x)(t-3): rel err " + sci(rel1) + "; [t]_3(x)t: " + sci(r2) + "; inversion pair: " + sci(r3) +
              "; factor 5 " + (neg ? "PASSED (bad)" : "fails") + "; " + sci(secs) + " s";
  o.notes.push_back("residue " + format_complex(r1) + " vs +6 P_3^mod(3) = " + format_double(pred));
  return o;
}

Outcome inversion_vanishing() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 4; ++n) {
    const Verdict v = inversion_vanish_check(E("t"), E("t-3"), n, 100, 1e-12);
    o.pass = o.pass && v.pass;
    worst = std::max(worst, v.residual);
  }
  o.summary = "max pointwise residual = " + sci(worst) + " (tol 1e-12, 100 points, n = 2,3,4)";
  return o;
}

Outcome symbolic_suites() {
  Outcome o;
  std::mt19937_64 rng(111);
  int dd_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const int weight = 3 + i % 3, degree = 1 + i % (weight - 2);
    std::vector<SymbolTerm> ts;
    for (int k = 0; k < 3; ++k) {
      SymbolTerm t;
      t.coeff = 1 + k;
      t.order = weight - degree + 1;
      t.arg = random_element(rng);
      for (int j = 0; j < degree - 1; ++j) t.wedge.push_back(random_element(rng));
      ts.push_back(t);
    }
    if (!differential(differential(ChainElement::from_terms(weight, degree, Variant::Mtilde, ts))).is_zero()) ++dd_bad;
  }

  const std::vector<SymbolTerm> pool = {
      term(1, 3, E("t"), E("t")),         term(1, 3, E("t"), E("t-3")),      term(1, 3, E("1/t"), E("t/(t-3)")),
      term(1, 3, E("t-3"), E("t-3")),     term(1, 3, E("t^2"), E("t")),      term(1, 3, E("t+1"), E("t")),
      term(1, 3, E("1-t"), E("1-t")),     term(1, 3, E("t"), E("t+2")),      term(1, 3, E("t^2+1"), E("t^2+1")),
      term(1, 3, E("1/(t+1)"), E("t+1")),
  };
  const auto cocycles = solve_cocycles(pool, 4);
  int suite_bad = 0;
  for (const auto& e : cocycles)
    if (!identity_suite(e).pass) ++suite_bad;

  int l419_bad = 0;
  for (int n = 2; n <= 6; ++n)
    if (!lemma419_check(n).pass) ++l419_bad;

  int div_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = random_element(rng);
    Rational deg = 0;
    for (const auto& x : support(f)) deg += f.order_at(x) * x.degree();
    if (deg != 0) ++div_bad;
  }
  o.pass = dd_bad == 0 && !cocycles.empty() && suite_bad == 0 && l419_bad == 0 && div_bad == 0;
  o.summary = "d o d nonzero on " + std::to_string(dd_bad) + "/100; identity suite fails on " +
              std::to_string(suite_bad) + "/" + std::to_string(cocycles.size()) +
              " solver cocycles (10-term pool); alternating construction fails for " + std::to_string(l419_bad) +
              " of n = 2..6; divisor degree nonzero on " + std::to_string(div_bad) + "/100";
  return o;
}

Outcome equality_oracle() {
  Outcome o;
  const auto a = chain(4, {term(1, 3, E("t"), E("t"))});
  const auto b = chain(4, {term(1, 3, E("t"), E("t-3")), term(1, 3, E("1/t"), E("t/(t-3)"))});
  const auto c = chain(3, {term(1, 2, E("t"), E("t-2"))});

  const Verdict va = is_global(a), vb = is_global(b), vc = is_global(c);
  const bool a_ok = va.pass;
  // hand computation: at t-3 the boundary is [3]_3 - [1/3]_3 (which P_3^mod kills)
  const bool b_ok = vb.pass && boundary(b, Place::rational(3)).to_string() == "-[1/3]_3 + [3]_3";
  // catalogued claim: not global, residual D(2) ~ 1.0149 (to 1e-6)
  const std::string bc = boundary(c, Place::rational(2)).to_string();
  // closed form: D(x) = Im Li_2(x) + arg(1-x) log|x|, and Im Li_2(2) = -pi log 2
  const double d2_oracle = -M_PI * std::log(2.0) + M_PI * std::log(2.0);
  const bool c_ok = !vc.pass && std::abs(vc.residual - 1.0149) < 5e-5 && std::abs(vc.residual - d2_oracle) < 1e-6;
  o.pass = a_ok && b_ok && c_ok;
  o.summary = std::string("zero: ") + (a_ok ? "agrees" : "DISAGREES") + "; zero-by-inversion: " +
              (b_ok ? "agrees" : "DISAGREES") + "; [t]_2(x)(t-2): is_global says " +
              (vc.pass ? "global (residual " + sci(vc.residual) + ")" : "not global") +
              ", catalogued claim is not global with residual 1.0149";

  // Supporting lines: the boundary is right, D(2) really is 0, and 1.0149
  // is the value of D at a primitive sixth root of unity.
  o.notes.push_back("boundary of [t]_2(x)(t-2) at t-2 = " + bc + " (hand value [2]_2)");
  const double d2 = bloch_wigner(2.0);
  o.notes.push_back("D(2) = " + sci(d2) + ", closed form " + sci(d2_oracle) +
                    " (D vanishes on the real line, so the catalogued residual cannot arise here)");
  const auto w = chain(3, {term(1, 2, E("t"), E("t^2-t+1"))});
  const Verdict vw = is_global(w);
  o.notes.push_back("[t]_2(x)(t^2-t+1): is_global " + std::string(vw.pass ? "global" : "not global") +
                    ", residual " + format_double(vw.residual) + " = D(exp(i pi/3)) = " +
                    format_double(bloch_wigner(std::polar(1.0, M_PI / 3))));
  return o;
}

Outcome determinant() {
  const Complex tpi = 2.0 * M_PI * I;
  double worst = 0;
  for (int n = 2; n <= 4; n += 2)
    for (double q : {0.75, -2.0, 1.0 / 3.0}) {
      const auto d = regulator_determinant({{std::pow(tpi, n) * I * q}}, {{I}}, n);
      worst = std::max(worst, std::abs(d.value - q) + std::abs(d.imag_residual));
    }
  const auto diag = regulator_determinant({{tpi * 3.0, 0.0, 0.0}, {0.0, tpi * -0.5, 0.0}, {0.0, 0.0, tpi * 2.0}},
                                          {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}, 1);
  const double diag_err = std::abs(diag.value + 3.0);
  const std::vector<std::vector<Complex>> R = {{I * 2.0, I * 1.0}, {I * -3.0, I * 5.0}};
  const std::vector<std::vector<Complex>> T = {{1.0, 2.0}, {0.5, -1.0}};
  auto R2 = R;
  for (auto& row : R2)
    for (auto& x : row) x *= 7.0;
  auto R1 = R;
  for (auto& x : R1[0]) x *= -4.0;  // one row: linear in that row
  const double base = regulator_determinant(R, T, 1).value;
  const double s_all = std::abs(regulator_determinant(R2, T, 1).value - 49 * base) / std::abs(49 * base);
  const double s_row = std::abs(regulator_determinant(R1, T, 1).value + 4 * base) / std::abs(4 * base);
  return {worst < 1e-12 && diag_err < 1e-12 && s_all < 1e-12 && s_row < 1e-12,
          "1x1 (n even) " + sci(worst) + "; diagonal " + sci(diag_err) + "; lambda^r scaling " + sci(s_all) +
              "; row linearity " + sci(s_row) + " (tol 1e-12)",
          {"1x1 uses even n: R = (2 pi i)^n i q is purely imaginary only then"}};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"inversion functional equation", inversion_equation},
      {"P_3,Zag versus P_3^mod", zag_mod_p3},
      {"Zag-to-mod expansion", zag_expansion},
      {"differential of P_n,Zag", zag_differential},
      {"five-term and auxiliary relations", five_term_relation},
      {"22-term relation", twentytwo_term},
      {"constancy of relation families", constancy},
      {"standard integrals", standard_integrals},
      {"boundary residues", boundary_residues},
      {"inversion vanishing of the integrand", inversion_vanishing},
      {"symbolic suites", symbolic_suites},
      {"equality-oracle consistency", equality_oracle},
      {"regulator determinant", determinant},
  };
  int failed = 0;
  std::string failing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.summary.c_str(), secs);
    for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      failing += (failing.empty() ? "" : ",") + std::to_string(i + 1);
    }
  }
  std::printf("%zu criteria evaluated: %zu pass, %d fail%s\n", criteria.size(), criteria.size() - failed, failed,
              failing.empty() ? "" : (" (" + failing + ")").c_str());
  return failed;
}
