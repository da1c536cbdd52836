#pragma once

#include <vector>

namespace neumass {

struct QuadRule1D {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule with n points, exact for polynomials of degree 2n-1.
// Nodes are open (no endpoints).
QuadRule1D gauss_legendre(int n);

// Same rule mapped to [a, b]; weights sum to b-a.
QuadRule1D gauss_legendre(int n, double a, double b);

struct QuadRule2D {
  std::vector<double> x;  // barycentric-free: points on the reference
  std::vector<double> y;  // triangle {xi>=0, eta>=0, xi+eta<=1}
  std::vector<double> w;  // weights sum to 1/2 (reference area)
};

// Tensor Gauss rule collapsed onto the reference triangle (Duffy map),
// n points per direction.
QuadRule2D triangle_gauss(int n);

// Symmetric 7-point rule on the reference triangle, degree 5.
QuadRule2D triangle_degree5();

}  // namespace neumass
