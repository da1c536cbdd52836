#include "neumass/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace neumass {

QuadRule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  QuadRule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

QuadRule1D gauss_legendre(int n, double a, double b) {
  QuadRule1D base = gauss_legendre(n);
  QuadRule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * base.nodes[i];
    r.weights[i] = half * base.weights[i];
  }
  return r;
}

QuadRule2D triangle_gauss(int n) {
  QuadRule1D g = gauss_legendre(n, 0.0, 1.0);
  QuadRule2D r;
  r.x.reserve(static_cast<std::size_t>(n) * n);
  r.y.reserve(static_cast<std::size_t>(n) * n);
  r.w.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = g.nodes[i], v = g.nodes[j];
      // Duffy: (u,v) in [0,1]^2 -> (u(1-v), uv), Jacobian u.
      r.x.push_back(u * (1.0 - v));
      r.y.push_back(u * v);
      r.w.push_back(g.weights[i] * g.weights[j] * u);
    }
  }
  return r;
}

QuadRule2D triangle_degree5() {
  QuadRule2D r;
  const double a = (6.0 + std::sqrt(15.0)) / 21.0;
  const double b = (6.0 - std::sqrt(15.0)) / 21.0;
  const double wa = (155.0 + std::sqrt(15.0)) / 2400.0;
  const double wb = (155.0 - std::sqrt(15.0)) / 2400.0;
  r.x = {1.0 / 3.0, a, 1.0 - 2.0 * a, a, b, 1.0 - 2.0 * b, b};
  r.y = {1.0 / 3.0, a, a, 1.0 - 2.0 * a, b, b, 1.0 - 2.0 * b};
  r.w = {9.0 / 80.0, wa, wa, wa, wb, wb, wb};
  return r;
}

}  // namespace neumass
