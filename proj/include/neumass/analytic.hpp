#pragma once

#include <span>
#include <vector>

#include "neumass/geometry.hpp"

namespace neumass {

enum class Family { square_2pi, right_isosceles_pi, equilateral };

enum class SquareSide { x0, x2pi, y0, y2pi };

// Which real combination of the antisymmetrized plane-wave sum is taken.
// sine contains the (m,m) modes; cosine exists only for m != n.
enum class EquilateralSym { sine, cosine };

const char* to_string(Family f);
const char* to_string(SquareSide s);

// Exact Dirichlet eigenfunction with analytic values and gradients.
// lambda has units 1/length^2, h = lambda^{-1/2}, and the stored
// normalization makes the L2 norm over the domain equal to 1.
class ClosedFormEigenfunction {
 public:
  Family family;
  int m = 0, n = 0;  // (j,k) for square / right-isosceles families
  EquilateralSym sym = EquilateralSym::sine;
  double side = 0.0;  // equilateral side length L
  double lambda = 0.0;
  double h = 0.0;
  double normalization = 0.0;

  double value(Vec2 p) const;
  Vec2 gradient(Vec2 p) const;

  // Bulk evaluation with a domain check (OutOfDomain beyond 1e-12).
  void evaluate(std::span<const Vec2> points, std::vector<double>& values,
                std::vector<Vec2>& gradients) const;

  bool contains(Vec2 p, double tol = 1e-12) const;

  // The triangular domain for the two triangle families; throws
  // GeometryMismatch for the square.
  Triangle domain_triangle() const;

 private:
  friend ClosedFormEigenfunction square_eigenfunction(int, int);
  friend ClosedFormEigenfunction right_isosceles_eigenfunction(int, int);
  friend ClosedFormEigenfunction equilateral_eigenfunction(int, int,
                                                           EquilateralSym,
                                                           double);
  // Equilateral plane-wave components: value = normalization * Im or Re of
  // sum_i coeff_i * exp(i k_i . x).
  struct Wave {
    double kx, ky;
    double sign;
  };
  std::vector<Wave> waves_;
};

// u = pi^{-1} sin(jx) sin(ky) on [0, 2pi]^2, lambda = j^2 + k^2.
ClosedFormEigenfunction square_eigenfunction(int j, int k);

// Closed-form side mass pi^{-1} h^2 j^2 (x-sides) / pi^{-1} h^2 k^2 (y-sides).
double square_neumann_mass(int j, int k, SquareSide side);

struct ScalingRow {
  int j, k;
  double h;
  double mass;
  double mass_over_h2;
};

// Modes (1, k) for k = 1..k_max; mass/h^2 is the constant 1/pi.
std::vector<ScalingRow> square_mass_scaling_demo(int k_max);

// Antisymmetrized square mode on the triangle (0,0), (0,pi), (pi,pi),
// u = (2/pi)(sin(jx)sin(ky) - sin(kx)sin(jy)), requires j < k.
ClosedFormEigenfunction right_isosceles_eigenfunction(int j, int k);

// Lame-type mode on the equilateral triangle (0,0), (L,0), (L/2, sqrt3 L/2),
// lambda = (16 pi^2 / (9 L^2)) (m^2 + mn + n^2).
ClosedFormEigenfunction equilateral_eigenfunction(int m, int n,
                                                 EquilateralSym sym,
                                                 double L = 1.0);

// The `count` lowest distinct modes of a family, sorted by lambda then
// lexicographic mode. For the equilateral family this is the sine class.
std::vector<ClosedFormEigenfunction> lowest_modes(Family fam, int count,
                                                  double L = 1.0);

}  // namespace neumass
