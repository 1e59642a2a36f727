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

#include <string>
#include <vector>

#include <complex>

#include "polyreg/field.hpp"
#include "polyreg/symbols.hpp"
#include "polyreg/verdict.hpp"

namespace polyreg {

/// a dz + b dz-bar at a point.
struct OneFormValue {
  Complex a = 0.0;
  Complex b = 0.0;

  OneFormValue& operator+=(const OneFormValue& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend OneFormValue operator+(OneFormValue x, const OneFormValue& y) { return x += y; }
  friend OneFormValue operator*(Complex s, OneFormValue x) {
    x.a *= s;
    x.b *= s;
    return x;
  }
  /// Value on the tangent vector v (as a complex number).
  Complex pair(Complex v) const { return a * v + b * std::conj(v); }
  /// dx and dy components: P dx + Q dy.
  Complex dx() const { return a + b; }
  Complex dy() const { return Complex(0.0, 1.0) * (a - b); }
};

/// Coefficient of dx ^ dy in u ^ v.
Complex wedge_density(const OneFormValue& u, const OneFormValue& v);

enum class FormKind { dlog_abs, diarg, sigma };
FormKind parse_form_kind(const std::string& s);

/// d log|f|, d i arg f, or sigma(f1, f2) = log|f1| d i arg f2 - log|f2| d i arg f1.
/// Throws "pole" at zeros and poles of the arguments.
OneFormValue form_eval(FormKind kind, const FieldElement& f1, Complex z, const FieldElement& f2 = {});

OneFormValue dlog_abs(const FieldElement& f, Complex z);
OneFormValue diarg(const FieldElement& f, Complex z);

enum class ResidueVersion { mod, zag };

/// Residue 1-form of a weight-4 degree-2 element, as a complex-valued form:
///   mod: sum c_j (6 P_3^mod(f_j) d i arg g_j - 2 log|g_j| P_2^mod(f_j) d log|f_j|)
///   zag: sum c_j (6 P_3,Zag(f_j) d i arg g_j + log^2|f_j| log|g_j| d i arg(1 - f_j))
/// with polylog values taken as complex numbers (coefficient times i^twist).
OneFormValue residue_form(const ChainElement& e, Complex z, ResidueVersion version = ResidueVersion::mod);

/// Points where residue_form is singular: zeros and poles of f_j, 1 - f_j, g_j.
std::vector<Complex> residue_singularities(const ChainElement& e);

struct ContourSpec {
  Place place;
  std::size_t embedding = 0;
  std::vector<double> radii{1e-2, 3e-3, 1e-3};
  int nodes = 512;
  double node_tol = 1e-9;
  ResidueVersion version = ResidueVersion::mod;
};

struct ContourResult {
  Complex residue;                 ///< -1/(2 pi i) times the extrapolated integral
  Complex center;
  std::vector<Complex> per_radius; ///< raw circle integrals
  std::vector<int> nodes;
  double fit_residual = 0.0;
  bool converged = true;
};

ContourResult contour_residue(const ChainElement& e, const ContourSpec& spec);

struct BoundaryOptions {
  double tol = 1e-3;
  /// Factor in -factor * sum c_j ord_x(g_j) P_3^mod(f_j(x)).
  double factor = 6.0;
  /// Global orientation sign applied to the prediction.
  int sign = 1;
  ResidueVersion version = ResidueVersion::mod;
  std::vector<double> radii{1e-2, 3e-3, 1e-3};
};

/// Contour residue against the prediction from boundary(e, x), per embedding.
Verdict verify_boundary(const ChainElement& e, const Place& x, const BoundaryOptions& opt = {});

/// Constancy: certificate in Sym^(n-2) (x) wedge^2 plus sampled constancy of
/// sum c_j p_mod(n, f_j).
Verdict constancy_check(const std::vector<std::pair<Rational, FieldElement>>& c, int n, int samples = 100,
                        double tol = 1e-8, unsigned long long seed = 0x5a3b1c);

enum class StandardIntegral { diarg_dlog, dlog_diarg, diarg_diarg, dlog_dlog, dlogsq_dlogbar, bump, dh };
StandardIntegral parse_standard_integral(const std::string& s);
std::string to_string(StandardIntegral w);

struct StandardIntegralOptions {
  std::vector<double> epsilons{1e-2, 1e-3};
  double rel_tol = 1e-3;
  double quad_tol = 1e-9;
};

/// Numerical value of one of the standard integrals over P^1 against its
/// closed form; c is ignored for bump and dh.
Verdict standard_integral(StandardIntegral which, Complex c, const StandardIntegralOptions& opt = {});

/// W(f, g, n) = log|g| log^(n-2)|f| (log|1-f| d log|f| - log|f| d log|1-f|),
/// optionally scaled by 2^n n/(n+1).
OneFormValue thm34_integrand(const FieldElement& f, const FieldElement& g, int n, Complex z, bool scaled = false);

/// 2^n log|g| log^(n-1)|f| d log|1-f|.
OneFormValue thm34_main_integrand(const FieldElement& f, const FieldElement& g, int n, Complex z);

/// W(f, g, n) + (-1)^n W(1/f, g, n) = 0 pointwise.
Verdict inversion_vanish_check(const FieldElement& f, const FieldElement& g, int n, int samples = 100,
                               double tol = 1e-12, unsigned long long seed = 0x77aa11);

/// Central finite differences of P_{n,Zag} against
///   P_{n-1,Zag} d i arg z + (-1)^n log^(n-1)|z|/(n-1)! pi_{n-1} d log(1 - z),
/// relative error at `samples` points away from 0 and 1.
Verdict zag_differential_check(int n, int samples = 50, double step = 1e-5, double tol = 1e-5,
                      unsigned long long seed = 0x21);

/// Finite-difference exterior derivative of sigma(f1, f2): coefficient of
/// dx ^ dy, max over sample points (closedness).
Verdict sigma_closedness_check(const FieldElement& f1, const FieldElement& f2, int samples = 50,
                               double step = 1e-5, double tol = 1e-5, unsigned long long seed = 0x51);

struct DeterminantResult {
  double value = 0.0;
  double imag_residual = 0.0;
};

/// det(R) / ((2 pi i)^(n r) det(T)) for r x r matrices. R must be purely
/// imaginary to within 1e-9 (relative to max(1, |R_ij|)).
DeterminantResult regulator_determinant(const std::vector<std::vector<Complex>>& R,
                                        const std::vector<std::vector<Complex>>& T, int n);

}  // namespace polyreg
