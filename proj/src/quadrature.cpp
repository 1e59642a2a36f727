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

#include "polyreg/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <queue>

namespace polyreg {

Complex integrate_gk(const ComplexFn1& f, double a, double b, double tol, unsigned max_depth, double* error) {
  // Global subdivision on single 15-point panels: always split the panel
  // with the largest error estimate. The stopping rule has an absolute floor
  // (tol itself), so integrals that cancel to 0 still terminate.
  struct Panel {
    double a, b;
    Complex value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  auto panel = [&](double x, double y) {
    double e = 0.0;
    const Complex v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, x, y, 0, 0.0, &e);
    return Panel{x, y, v, e};
  };
  std::priority_queue<Panel> heap;
  heap.push(panel(a, b));
  Complex total = heap.top().value;
  double err = heap.top().err;
  const std::size_t max_panels = std::size_t{1} << std::min(max_depth, 20u);
  while (err > std::max(tol, tol * std::abs(total)) && heap.size() < max_panels) {
    const Panel p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    Panel l = panel(p.a, m), r = panel(m, p.b);
    total += l.value + r.value - p.value;
    err += l.err + r.err - p.err;
    heap.push(l);
    heap.push(r);
  }
  if (error) *error = err;
  return total;
}

Complex trapezoid_periodic(const ComplexFn1& g, int nodes) {
  const double h = 2.0 * std::numbers::pi / nodes;
  Complex s = 0.0;
  for (int k = 0; k < nodes; ++k) s += g(h * k);
  return s * h;
}

CircleIntegral trapezoid_converged(const ComplexFn1& g, int start, double tol, int max_nodes) {
  CircleIntegral out;
  int n = start;
  Complex prev = trapezoid_periodic(g, n);
  while (n < max_nodes) {
    // The doubled rule reuses the old nodes; only the midpoints are new.
    const double h = 2.0 * std::numbers::pi / (2 * n);
    Complex mid = 0.0;
    for (int k = 0; k < n; ++k) mid += g(h * (2 * k + 1));
    const Complex next = 0.5 * prev + mid * h;
    n *= 2;
    out.last_change = std::abs(next - prev);
    prev = next;
    if (out.last_change < tol) {
      out.converged = true;
      break;
    }
  }
  out.value = prev;
  out.nodes = n;
  return out;
}

namespace {

double weight(Complex t, Complex p) {
  const double d2 = std::norm(t - p);
  return 1.0 / (d2 * d2);
}

}  // namespace

Complex integrate_plane(const Density& F, const std::vector<Complex>& centers, const PlaneOptions& opt) {
  if (centers.empty()) throw Error("domain", "integrate_plane needs at least one center");
  Complex total = 0.0;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const Complex pk = centers[k];
    auto chi = [&](Complex t) {
      const double wk = weight(t, pk);
      if (!std::isfinite(wk)) return 1.0;
      double s = 0.0;
      for (Complex p : centers) {
        const double w = weight(t, p);
        if (!std::isfinite(w)) return 0.0;
        s += w;
      }
      return wk / s;
    };
    // Angular integral at radius r, times r (polar Jacobian).
    auto ring = [&](double r) -> Complex {
      auto g = [&](double th) -> Complex {
        const Complex t = pk + std::polar(r, th);
        const double c = chi(t);
        if (c == 0.0) return 0.0;
        return F(t) * c;
      };
      // Periodic in theta: the trapezoid rule converges fast once the ring
      // stays clear of the other centers, where chi_k vanishes to 4th order.
      return trapezoid_converged(g, 64, opt.tol, 1 << 14).value * r;
    };
    if (opt.support > 0.0) {
      total += integrate_gk(ring, opt.epsilon, opt.support, opt.tol);
      continue;
    }
    // Inner radii directly; beyond R = 1 substitute r = 1/s.
    const double R = 1.0;
    total += integrate_gk(ring, opt.epsilon, R, opt.tol);
    auto outer = [&](double s) -> Complex {
      if (s <= 0.0) return 0.0;
      return ring(R / s) * (R / (s * s));
    };
    total += integrate_gk(outer, 0.0, 1.0, opt.tol);
  }
  return total;
}

Complex richardson(Complex at_e1, double e1, Complex at_e2, double e2, int order) {
  const double a = std::pow(e1, order), b = std::pow(e2, order);
  return (a * at_e2 - b * at_e1) / (a - b);
}

}  // namespace polyreg
