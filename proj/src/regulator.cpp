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

#include "polyreg/regulator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "polyreg/expr.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/quadrature.hpp"

namespace polyreg {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
const Complex kTwoPiI(0.0, 2.0 * kPi);

OneFormValue dlog_abs_from(Complex d) { return {0.5 * d, std::conj(0.5 * d)}; }
OneFormValue diarg_from(Complex d) { return {0.5 * d, -std::conj(0.5 * d)}; }

std::string num(double x) { return format_double(x); }

}  // namespace

Complex wedge_density(const OneFormValue& u, const OneFormValue& v) {
  // dz ^ dz-bar = -2i dx ^ dy
  return Complex(0.0, -2.0) * (u.a * v.b - u.b * v.a);
}

FormKind parse_form_kind(const std::string& s) {
  if (s == "dlog_abs" || s == "dlog") return FormKind::dlog_abs;
  if (s == "diarg") return FormKind::diarg;
  if (s == "sigma") return FormKind::sigma;
  throw Error("usage", "form kind must be dlog_abs, diarg or sigma");
}

OneFormValue dlog_abs(const FieldElement& f, Complex z) { return dlog_abs_from(f.dlog(z)); }
OneFormValue diarg(const FieldElement& f, Complex z) { return diarg_from(f.dlog(z)); }

OneFormValue form_eval(FormKind kind, const FieldElement& f1, Complex z, const FieldElement& f2) {
  switch (kind) {
    case FormKind::dlog_abs:
      return dlog_abs(f1, z);
    case FormKind::diarg:
      return diarg(f1, z);
    case FormKind::sigma:
      return Complex(f1.log_abs(z)) * diarg(f2, z) + Complex(-f2.log_abs(z)) * diarg(f1, z);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Residue form and contours
// ---------------------------------------------------------------------------

namespace {

struct ResidueTerm {
  double c;
  FieldElement f;
  FieldElement one_minus_f;
  FieldElement g;
};

std::vector<ResidueTerm> residue_terms(const ChainElement& e) {
  if (e.weight() != 4 || e.degree() != 2)
    throw Error("shape", "the residue form needs a weight-4 degree-2 element");
  std::vector<ResidueTerm> out;
  for (const auto& [key, c] : e.terms()) {
    if (key.order != 3 || key.slots.size() != 1) throw Error("shape", "unexpected term in weight-4 degree 2");
    out.push_back(ResidueTerm{c.get_d(), key.arg, key.arg.one_minus(), generator_element(key.slots[0])});
  }
  return out;
}

OneFormValue residue_form_terms(const std::vector<ResidueTerm>& terms, Complex z, ResidueVersion version) {
  OneFormValue w;
  for (const auto& t : terms) {
    const Complex fz = t.f.evaluate(z);
    if (version == ResidueVersion::mod) {
      const Complex p3 = p_mod(3, fz).value();
      const Complex p2 = p_mod(2, fz).value();
      w += t.c * (6.0 * p3 * diarg(t.g, z) + (-2.0 * t.g.log_abs(z)) * p2 * dlog_abs(t.f, z));
    } else {
      const Complex p3 = p_zag(3, fz).value();
      const double lf = t.f.log_abs(z);
      w += t.c * (6.0 * p3 * diarg(t.g, z) + Complex(lf * lf * t.g.log_abs(z)) * diarg(t.one_minus_f, z));
    }
  }
  return w;
}

}  // namespace

OneFormValue residue_form(const ChainElement& e, Complex z, ResidueVersion version) {
  return residue_form_terms(residue_terms(e), z, version);
}

std::vector<Complex> residue_singularities(const ChainElement& e) {
  std::vector<Complex> out;
  for (const auto& t : residue_terms(e))
    for (const auto* h : {&t.f, &t.one_minus_f, &t.g})
      for (Complex z : h->singular_points()) out.push_back(z);
  return out;
}

ContourResult contour_residue(const ChainElement& e, const ContourSpec& spec) {
  const auto terms = residue_terms(e);
  if (spec.radii.size() < 3) throw Error("domain", "radius extrapolation needs at least three radii");
  ContourResult out;
  const bool at_infinity = spec.place.is_infinity();
  if (!at_infinity) {
    const auto emb = embeddings_of(spec.place);
    if (spec.embedding >= emb.size()) throw Error("domain", "embedding index out of range");
    out.center = emb[spec.embedding].root;
  }
  // Circles must stay clear of every other singular point.
  const double rmax = *std::max_element(spec.radii.begin(), spec.radii.end());
  for (Complex s : residue_singularities(e)) {
    // distance in the local chart (1/t at infinity)
    const double d = at_infinity ? 1.0 / std::abs(s) : std::abs(s - out.center);
    if (d > 1e-12 && d < 2.0 * rmax)
      throw Error("quadrature", "singular point " + format_complex(s) + " lies too close to the circles around " +
                                    spec.place.to_string());
  }
  for (double r : spec.radii) {
    auto g = [&](double th) -> Complex {
      const Complex w = std::polar(r, th);
      Complex z, dz;
      if (at_infinity) {
        z = 1.0 / w;
        dz = -kI / w;  // counterclockwise in the chart 1/t
      } else {
        z = out.center + w;
        dz = kI * w;
      }
      return residue_form_terms(terms, z, spec.version).pair(dz);
    };
    const CircleIntegral ci = trapezoid_converged(g, spec.nodes, spec.node_tol);
    out.per_radius.push_back(ci.value);
    out.nodes.push_back(ci.nodes);
    out.converged = out.converged && ci.converged;
  }
  // value(r) = A + B r log r + C r
  const Eigen::Index m = static_cast<Eigen::Index>(spec.radii.size());
  Eigen::MatrixXcd X(m, 3);
  Eigen::VectorXcd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double r = spec.radii[static_cast<std::size_t>(i)];
    X(i, 0) = 1.0;
    X(i, 1) = r * std::log(r);
    X(i, 2) = r;
    y(i) = out.per_radius[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd beta = X.colPivHouseholderQr().solve(y);
  out.fit_residual = (X * beta - y).norm();
  out.residue = -beta(0) / kTwoPiI;
  return out;
}

Verdict verify_boundary(const ChainElement& e, const Place& x, const BoundaryOptions& opt) {
  Verdict v;
  v.name = "boundary residue at " + x.to_string();
  v.mode = "numeric";
  v.tolerance = opt.tol;
  v.pass = true;
  const BoundaryResult b = boundary(e, x);
  v.details.push_back("boundary " + b.to_string());
  std::vector<std::pair<Rational, FieldElement>> comb;
  for (const auto& t : b.terms)
    if (t.order == 3 && t.wedge.empty()) comb.emplace_back(t.coeff, t.arg);
  const std::size_t count = x.is_infinity() ? 1 : embeddings_of(x).size();
  std::vector<PolylogValue> reg(count, PolylogValue{0.0, 2, false});
  if (!comb.empty()) reg = nf_regulator(3, comb, x, false);
  double worst = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    Verdict c;
    c.name = "embedding " + std::to_string(s);
    c.mode = "numeric";
    c.tolerance = opt.tol;
    const Complex predicted = -opt.factor * opt.sign * reg[s].value();
    ContourSpec spec;
    spec.place = x;
    spec.embedding = s;
    spec.radii = opt.radii;
    spec.version = opt.version;
    const ContourResult r = contour_residue(e, spec);
    c.claimed = format_complex(predicted);
    c.computed = format_complex(r.residue);
    c.residual = std::abs(r.residue - predicted);
    c.pass = r.converged && c.residual <= opt.tol * std::max(1.0, std::abs(predicted));
    c.details.push_back("fit residual " + num(r.fit_residual));
    if (!r.converged) c.details.push_back("node doubling did not converge");
    worst = std::max(worst, c.residual);
    v.children.push_back(std::move(c));
  }
  v.residual = worst;
  v.computed = num(worst);
  v.claimed = "factor " + num(opt.factor);
  v.absorb_children();
  return v;
}

// ---------------------------------------------------------------------------
// Constancy of relation sums
// ---------------------------------------------------------------------------

namespace {

std::vector<Complex> avoid_points(const std::vector<FieldElement>& fs, bool with_one_minus, int count,
                                  unsigned long long seed) {
  std::vector<Complex> bad;
  for (const auto& f : fs) {
    for (Complex z : f.singular_points()) bad.push_back(z);
    if (with_one_minus && !f.is_torsion() && f.has_integer_exponents())
      for (Complex z : f.one_minus().singular_points()) bad.push_back(z);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex z(u(rng), u(rng));
    if (std::all_of(bad.begin(), bad.end(), [&](Complex w) { return std::abs(z - w) > 1e-2; })) out.push_back(z);
  }
  return out;
}

}  // namespace

Verdict constancy_check(const std::vector<std::pair<Rational, FieldElement>>& c, int n, int samples, double tol,
                        unsigned long long seed) {
  Verdict v;
  v.name = "constancy of sum c_j P_" + std::to_string(n) + "^mod(f_j)";
  v.pass = true;
  if (n < 2) throw Error("domain", "constancy_check needs n >= 2");
  for (const auto& [a, f] : c)
    if (!f.has_integer_exponents()) throw Error("domain", "constancy_check needs integer exponents");

  Verdict cert;
  cert.name = "hypothesis in Sym^(n-2) (x) wedge^2";
  cert.mode = "strict";
  cert.claimed = "0";
  const auto t = constancy_tensor(c, n);
  cert.pass = t.empty();
  cert.computed = t.empty() ? "0" : std::to_string(t.size()) + " nonzero coordinates";

  Verdict numc;
  numc.name = "sampled deviation from the mean";
  numc.mode = "numeric";
  numc.tolerance = tol;
  numc.claimed = "0";
  std::vector<FieldElement> fs;
  for (const auto& [a, f] : c) fs.push_back(f);
  std::vector<double> sums;
  for (Complex z : avoid_points(fs, true, samples, seed)) {
    double s = 0.0;
    for (const auto& [a, f] : c) s += a.get_d() * p_mod(n, f.evaluate(z)).coeff;
    sums.push_back(s);
  }
  double mean = 0.0;
  for (double s : sums) mean += s;
  mean /= static_cast<double>(sums.size());
  double dev = 0.0;
  for (double s : sums) dev = std::max(dev, std::abs(s - mean));
  numc.residual = dev;
  numc.computed = num(dev);
  numc.pass = dev < tol;
  numc.details.push_back("mean " + num(mean) + " over " + std::to_string(sums.size()) + " points");

  v.children.push_back(std::move(cert));
  v.children.push_back(std::move(numc));
  v.absorb_children();
  v.computed = num(mean);
  return v;
}

// ---------------------------------------------------------------------------
// Standard integrals
// ---------------------------------------------------------------------------

StandardIntegral parse_standard_integral(const std::string& s) {
  if (s == "diarg_dlog" || s == "diarg^dlog|") return StandardIntegral::diarg_dlog;
  if (s == "dlog_diarg") return StandardIntegral::dlog_diarg;
  if (s == "diarg_diarg" || s == "diarg^diarg") return StandardIntegral::diarg_diarg;
  if (s == "dlog_dlog") return StandardIntegral::dlog_dlog;
  if (s == "dlogsq_dlogbar") return StandardIntegral::dlogsq_dlogbar;
  if (s == "bump") return StandardIntegral::bump;
  if (s == "dh") return StandardIntegral::dh;
  throw Error("usage", "unknown standard integral '" + s +
                           "' (diarg_dlog, dlog_diarg, diarg_diarg, dlog_dlog, dlogsq_dlogbar, bump, dh)");
}

std::string to_string(StandardIntegral w) {
  switch (w) {
    case StandardIntegral::diarg_dlog: return "diarg_dlog";
    case StandardIntegral::dlog_diarg: return "dlog_diarg";
    case StandardIntegral::diarg_diarg: return "diarg_diarg";
    case StandardIntegral::dlog_dlog: return "dlog_dlog";
    case StandardIntegral::dlogsq_dlogbar: return "dlogsq_dlogbar";
    case StandardIntegral::bump: return "bump";
    case StandardIntegral::dh: return "dh";
  }
  return "?";
}

namespace {

double psi(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
double dpsi(double x) { return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }

// Smooth radial bump: 1 for r <= 1/4, 0 for r >= 1/2.
double bump_derivative(double r) {
  const double A = psi(0.5 - r), B = psi(r - 0.25);
  const double dA = -dpsi(0.5 - r), dB = dpsi(r - 0.25);
  const double s = A + B;
  return (dA * B - A * dB) / (s * s);
}

// g(r) dr as a 1-form at t (centered at 0).
OneFormValue radial(double gr, Complex t) {
  const double r = std::abs(t);
  return {gr * std::conj(t) / (2.0 * r), gr * t / (2.0 * r)};
}

}  // namespace

Verdict standard_integral(StandardIntegral which, Complex c, const StandardIntegralOptions& opt) {
  Verdict v;
  v.name = "standard integral " + to_string(which);
  v.mode = "numeric";
  v.tolerance = opt.rel_tol;
  const bool uses_c = which != StandardIntegral::bump && which != StandardIntegral::dh;
  if (uses_c && (std::abs(c) < 1e-12 || std::abs(c - 1.0) < 1e-12)) throw Error("domain", "c must avoid 0 and 1");

  // u = (t - c)/(t - 1)
  auto dlog_u = [c](Complex t) { return 1.0 / (t - c) - 1.0 / (t - 1.0); };
  Density F;
  std::vector<Complex> centers{0.0};
  Complex expected = 0.0;
  double support = 0.0;
  const double logc = std::log(std::abs(c));
  switch (which) {
    case StandardIntegral::diarg_dlog:
      F = [=](Complex t) { return wedge_density(diarg_from(dlog_u(t)), dlog_abs_from(1.0 / t)); };
      expected = kTwoPiI * logc;
      break;
    case StandardIntegral::dlog_diarg:
      F = [=](Complex t) { return wedge_density(dlog_abs_from(dlog_u(t)), diarg_from(1.0 / t)); };
      expected = -kTwoPiI * logc;
      break;
    case StandardIntegral::diarg_diarg:
      F = [=](Complex t) { return wedge_density(diarg_from(dlog_u(t)), diarg_from(1.0 / t)); };
      break;
    case StandardIntegral::dlog_dlog:
      F = [=](Complex t) { return wedge_density(dlog_abs_from(dlog_u(t)), dlog_abs_from(1.0 / t)); };
      break;
    case StandardIntegral::dlogsq_dlogbar:
      F = [=](Complex t) {
        return wedge_density(2.0 * dlog_abs_from(dlog_u(t)), OneFormValue{0.0, 1.0 / std::conj(t)});
      };
      expected = 2.0 * kTwoPiI * logc;
      break;
    case StandardIntegral::bump:
      F = [](Complex t) { return wedge_density(radial(bump_derivative(std::abs(t)), t), diarg_from(1.0 / t)); };
      expected = -kTwoPiI;
      support = 0.5;
      break;
    case StandardIntegral::dh:
      F = [](Complex t) {
        const double r = std::abs(t);
        const double q = 1.0 + r * r;
        return wedge_density(radial(2.0 * r / (q * q), t), diarg_from(1.0 / t));
      };
      expected = kTwoPiI;
      break;
  }
  if (uses_c) centers = {0.0, 1.0, c};

  std::vector<Complex> values;
  for (double eps : opt.epsilons) {
    PlaneOptions po;
    po.epsilon = eps;
    po.tol = opt.quad_tol;
    po.support = support;
    values.push_back(integrate_plane(F, centers, po));
    v.details.push_back("epsilon " + num(eps) + ": " + format_complex(values.back()));
  }
  Complex value = values.back();
  if (values.size() >= 2)
    value = richardson(values[values.size() - 2], opt.epsilons[values.size() - 2], values.back(),
                       opt.epsilons.back());
  v.claimed = format_complex(expected);
  v.computed = format_complex(value);
  v.residual = std::abs(value - expected);
  const double scale = std::abs(expected) > 0.0 ? std::abs(expected) : (2.0 * kPi) * (2.0 * kPi);
  v.pass = v.residual <= opt.rel_tol * scale;
  return v;
}

// ---------------------------------------------------------------------------
// Integrand of the regulator pairing
// ---------------------------------------------------------------------------

OneFormValue thm34_integrand(const FieldElement& f, const FieldElement& g, int n, Complex z, bool scaled) {
  if (n < 2) throw Error("domain", "n must be >= 2");
  const FieldElement h = f.one_minus();
  const double L = f.log_abs(z), M = h.log_abs(z), G = g.log_abs(z);
  const double pre = G * std::pow(L, n - 2);
  OneFormValue w = Complex(pre * M) * dlog_abs(f, z) + Complex(-pre * L) * dlog_abs(h, z);
  if (scaled) w = Complex(std::ldexp(1.0, n) * n / (n + 1.0)) * w;
  return w;
}

OneFormValue thm34_main_integrand(const FieldElement& f, const FieldElement& g, int n, Complex z) {
  const FieldElement h = f.one_minus();
  const double s = std::ldexp(1.0, n) * g.log_abs(z) * std::pow(f.log_abs(z), n - 1);
  return Complex(s) * dlog_abs(h, z);
}

Verdict inversion_vanish_check(const FieldElement& f, const FieldElement& g, int n, int samples, double tol,
                               unsigned long long seed) {
  Verdict v;
  v.name = "W(f) + (-1)^n W(1/f) = 0, n = " + std::to_string(n);
  v.mode = "numeric";
  v.tolerance = tol;
  v.claimed = "0";
  const FieldElement inv = f.inverse();
  double worst = 0.0;
  for (Complex z : avoid_points({f, g}, true, samples, seed)) {
    const OneFormValue a = thm34_integrand(f, g, n, z);
    const OneFormValue b = thm34_integrand(inv, g, n, z);
    const double s = n % 2 == 0 ? 1.0 : -1.0;
    const double diff = std::abs(a.a + s * b.a) + std::abs(a.b + s * b.b);
    const double size = std::max(1.0, std::abs(a.a) + std::abs(a.b));
    worst = std::max(worst, diff / size);
  }
  v.residual = worst;
  v.computed = num(worst);
  v.pass = worst < tol;
  v.details.push_back(std::to_string(samples) + " points, residual relative to max(1, |W|)");
  return v;
}

// ---------------------------------------------------------------------------
// Differential checks
// ---------------------------------------------------------------------------

Verdict zag_differential_check(int n, int samples, double step, double tol, unsigned long long seed) {
  Verdict v;
  v.name = "d P_" + std::to_string(n) + ",Zag by central differences";
  v.mode = "numeric";
  v.tolerance = tol;
  v.claimed = "0";
  if (n < 2) throw Error("domain", "zag_differential_check needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double factorial = 1.0;
  for (int k = 2; k < n; ++k) factorial *= k;
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  auto P = [n](Complex z) { return p_zag(n, z).value(); };
  double worst = 0.0;
  int done = 0;
  while (done < samples) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) < 0.1 || std::abs(z - 1.0) < 0.1) continue;
    ++done;
    const Complex Fx = (P(z + step) - P(z - step)) / (2.0 * step);
    const Complex Fy = (P(z + Complex(0.0, step)) - P(z - Complex(0.0, step))) / (2.0 * step);
    // d log(1 - z) = -dz / (1 - z)
    const Complex d = -1.0 / (1.0 - z);
    const OneFormValue w = dlog_abs_from(d) + diarg_from(d);
    const double c = sign * std::pow(std::log(std::abs(z)), n - 1) / factorial;
    const Complex low = p_zag(n - 1, z).value();
    const OneFormValue arg = diarg_from(1.0 / z);
    const Complex Rx = low * arg.dx() + c * project(w.dx(), n - 1).value();
    const Complex Ry = low * arg.dy() + c * project(w.dy(), n - 1).value();
    const double rel = std::hypot(std::abs(Fx - Rx), std::abs(Fy - Ry)) /
                       std::max(1e-300, std::hypot(std::abs(Rx), std::abs(Ry)));
    worst = std::max(worst, rel);
  }
  v.residual = worst;
  v.computed = num(worst);
  v.pass = worst < tol;
  v.details.push_back(std::to_string(samples) + " points, step " + num(step));
  return v;
}

Verdict sigma_closedness_check(const FieldElement& f1, const FieldElement& f2, int samples, double step, double tol,
                               unsigned long long seed) {
  Verdict v;
  v.name = "d sigma(f1, f2) = 0";
  v.mode = "numeric";
  v.tolerance = tol;
  v.claimed = "0";
  double worst = 0.0;
  for (Complex z : avoid_points({f1, f2}, false, samples, seed)) {
    auto s = [&](Complex w) { return form_eval(FormKind::sigma, f1, w, f2); };
    // sigma = P dx + Q dy, d sigma = (Q_x - P_y) dx ^ dy
    const Complex Qx = (s(z + step).dy() - s(z - step).dy()) / (2.0 * step);
    const Complex Py = (s(z + Complex(0.0, step)).dx() - s(z - Complex(0.0, step)).dx()) / (2.0 * step);
    const OneFormValue here = s(z);
    const double scale = std::max(1.0, std::abs(here.a) + std::abs(here.b));
    worst = std::max(worst, std::abs(Qx - Py) / scale);
  }
  v.residual = worst;
  v.computed = num(worst);
  v.pass = worst < tol;
  return v;
}

// ---------------------------------------------------------------------------
// Determinant
// ---------------------------------------------------------------------------

DeterminantResult regulator_determinant(const std::vector<std::vector<Complex>>& R,
                                        const std::vector<std::vector<Complex>>& T, int n) {
  const std::size_t r = R.size();
  if (r == 0 || T.size() != r) throw Error("shape", "R and T must be square of the same size");
  Eigen::MatrixXcd Rm(r, r), Tm(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (R[i].size() != r || T[i].size() != r) throw Error("shape", "R and T must be square of the same size");
    for (std::size_t j = 0; j < r; ++j) {
      if (std::abs(R[i][j].real()) > 1e-9 * std::max(1.0, std::abs(R[i][j])))
        throw Error("domain", "R(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                  format_complex(R[i][j]) + " is not purely imaginary");
      Rm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = R[i][j];
      Tm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = T[i][j];
    }
  }
  const Complex dT = Tm.determinant();
  if (std::abs(dT) == 0.0) throw Error("singular", "det(T) = 0");
  const Complex q = Rm.determinant() / (std::pow(kTwoPiI, n * static_cast<int>(r)) * dT);
  return {q.real(), q.imag()};
}

}  // namespace polyreg
