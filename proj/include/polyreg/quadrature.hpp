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

#include <functional>
#include <vector>

#include "polyreg/field.hpp"

namespace polyreg {

using ComplexFn1 = std::function<Complex(double)>;
/// Density of a 2-form against dx ^ dy, as a function of the point t.
using Density = std::function<Complex(Complex)>;

/// Adaptive Gauss-Kronrod (15 points) on [a, b]; stops when the error
/// estimate is below max(tol, tol * |I|) or after 2^max_depth panels.
Complex integrate_gk(const ComplexFn1& f, double a, double b, double tol = 1e-10, unsigned max_depth = 18,
                     double* error = nullptr);

/// Trapezoidal rule with `nodes` equally spaced points on [0, 2 pi).
Complex trapezoid_periodic(const ComplexFn1& g, int nodes);

struct CircleIntegral {
  Complex value;
  int nodes = 0;
  bool converged = false;
  double last_change = 0.0;
};

/// Trapezoid on [0, 2 pi), doubling the node count from `start` until two
/// successive values differ by less than `tol`.
CircleIntegral trapezoid_converged(const ComplexFn1& g, int start = 512, double tol = 1e-9, int max_nodes = 1 << 17);

struct PlaneOptions {
  /// Radius of the disc left out around each center.
  double epsilon = 1e-3;
  double tol = 1e-9;
  /// When positive, the density vanishes for |t - centers[0]| > support.
  double support = 0.0;
};

/// Integral of F dx ^ dy over C minus small discs around `centers`.
///
/// A partition of unity chi_k = w_k / sum w_j with w_k = |t - p_k|^-4 splits
/// the plane into pieces, each integrated in polar coordinates about its
/// center (radial part mapped to a finite interval beyond radius 1), with
/// nested adaptive Gauss-Kronrod.
Complex integrate_plane(const Density& F, const std::vector<Complex>& centers, const PlaneOptions& opt);

/// Extrapolation to epsilon = 0 from two exclusion radii, assuming the
/// error behaves like epsilon^order. Discs around 1/r singularities of a
/// 2-form lose O(epsilon^2) (the O(epsilon) part averages out over angles).
Complex richardson(Complex at_e1, double e1, Complex at_e2, double e2, int order = 2);

}  // namespace polyreg
