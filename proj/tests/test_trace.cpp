#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "neumass/analytic.hpp"
#include "neumass/assembly.hpp"
#include "neumass/eigensolver.hpp"
#include "neumass/errors.hpp"
#include "neumass/trace.hpp"

using namespace neumass;

namespace {
constexpr double kPi = M_PI;

Triangle right_isosceles_pi() {
  return triangle_from_vertices({0, 0}, {0, kPi}, {kPi, kPi});
}

}  // namespace

TEST_CASE("square analytic trace: flux and mass on x = 0") {
  auto f = square_eigenfunction(1, 1);
  NeumannTrace tr = analytic_square_trace(f, SquareSide::x0, 20);

  CHECK(tr.side_length == doctest::Approx(2 * kPi));
  double wsum = 0.0;
  for (std::size_t i = 0; i < tr.nodes.size(); ++i) {
    wsum += tr.weights[i];
    // h d_nu u = -h pi^-1 sin(y) with outward nu = (-1, 0)
    CHECK(tr.flux[i] ==
          doctest::Approx(-f.h / kPi * std::sin(tr.nodes[i])).epsilon(1e-13));
    CHECK(tr.nodes[i] > 0.0);
    CHECK(tr.nodes[i] < 2 * kPi);
    CHECK(tr.weights[i] > 0.0);
  }
  CHECK(wsum == doctest::Approx(2 * kPi).epsilon(1e-13));

  SideMass sm = side_mass(tr);
  CHECK(sm.value == doctest::Approx(1.0 / (2 * kPi)).epsilon(1e-12));
}

TEST_CASE("square: closed form equals quadrature for all modes j,k <= 8") {
  for (int j = 1; j <= 8; ++j) {
    for (int k = 1; k <= 8; ++k) {
      auto f = square_eigenfunction(j, k);
      // Gauss-Legendre needs roughly one node per radian of phase; the
      // integrand sin^2(k y) sweeps 4 pi k radians over the side.
      const int order = 7 * std::max(j, k) + 12;
      for (SquareSide s : {SquareSide::x0, SquareSide::x2pi, SquareSide::y0,
                           SquareSide::y2pi}) {
        const double quad = side_mass(analytic_square_trace(f, s, order)).value;
        const double closed = square_neumann_mass(j, k, s);
        CHECK(quad == doctest::Approx(closed).epsilon(1e-12));
      }
      // opposite sides carry equal masses
      CHECK(square_neumann_mass(j, k, SquareSide::x0) ==
            doctest::Approx(square_neumann_mass(j, k, SquareSide::x2pi)));
    }
  }
}

TEST_CASE("Theorem 1 on the exact right-isosceles family") {
  Triangle t = right_isosceles_pi();
  auto modes = lowest_modes(Family::right_isosceles_pi, 5);
  for (const auto& f : modes) {
    const int order = 4 * f.n + 16;
    for (int s = 0; s < 3; ++s) {
      const SideId side = static_cast<SideId>(s);
      const double mass = side_mass(analytic_trace(f, t, side, order)).value;
      const double pred = predicted_neumann_mass(t, side);
      CHECK(mass == doctest::Approx(pred).epsilon(1e-10));
    }
  }
  // legs 2/pi, hypotenuse 2 sqrt2 / pi
  CHECK(predicted_neumann_mass(t, SideId::A) == doctest::Approx(2 / kPi));
  CHECK(predicted_neumann_mass(t, SideId::C) ==
        doctest::Approx(2 * std::sqrt(2.0) / kPi));
}

TEST_CASE("analytic trace rejects a mismatched domain") {
  auto f = right_isosceles_eigenfunction(1, 2);
  Triangle other = triangle_from_vertices({0, 0}, {1, 0}, {0, 1});
  CHECK_THROWS_AS(analytic_trace(f, other, SideId::A, 10), GeometryMismatch);
}

TEST_CASE("analytic flux vanishes at corners") {
  auto f = equilateral_eigenfunction(1, 2, EquilateralSym::sine, 1.0);
  Triangle t = f.domain_triangle();
  for (const Vec2& corner : t.vertices)
    CHECK(f.gradient(corner).norm() <= 1e-12);

  auto fr = right_isosceles_eigenfunction(2, 3);
  for (const Vec2& corner : fr.domain_triangle().vertices)
    CHECK(fr.gradient(corner).norm() <= 1e-12);
}

TEST_CASE("scaling covariance: dilation by s divides side masses by s") {
  const double s = 2.5;
  auto f1 = equilateral_eigenfunction(1, 1, EquilateralSym::sine, 1.0);
  auto fs = equilateral_eigenfunction(1, 1, EquilateralSym::sine, s);
  Triangle t1 = f1.domain_triangle();
  Triangle ts = fs.domain_triangle();
  for (int k = 0; k < 3; ++k) {
    const SideId side = static_cast<SideId>(k);
    const double m1 = side_mass(analytic_trace(f1, t1, side, 24)).value;
    const double ms = side_mass(analytic_trace(fs, ts, side, 24)).value;
    CHECK(ms == doctest::Approx(m1 / s).epsilon(1e-11));
  }
}

TEST_CASE("zero and doubled flux") {
  auto f = square_eigenfunction(1, 1);
  NeumannTrace tr = analytic_square_trace(f, SquareSide::x0, 12);
  const double base = side_mass(tr).value;
  NeumannTrace doubled = tr;
  for (auto& v : doubled.flux) v *= 2.0;
  CHECK(side_mass(doubled).value == doctest::Approx(4.0 * base).epsilon(1e-14));
  NeumannTrace zero = tr;
  for (auto& v : zero.flux) v = 0.0;
  CHECK(side_mass(zero).value == 0.0);
}

TEST_CASE("FEM traces on the right-isosceles (1,2) mode") {
  Triangle t = right_isosceles_pi();
  auto exact = right_isosceles_eigenfunction(1, 2);

  Mesh mesh = refine_mesh(t, 5, Degree::p2);
  AssembledSystem sys = assemble(mesh);
  auto pairs = solve_lowest_eigenpairs(sys.K, sys.M, 1, 1e-9);
  const EigenPair& e = pairs[0];
  CHECK(e.lambda == doctest::Approx(5.0).epsilon(1e-3));

  for (int s = 0; s < 3; ++s) {
    const SideId side = static_cast<SideId>(s);
    const double pred = predicted_neumann_mass(t, side);

    NeumannTrace dir = fem_trace_direct(mesh, e, side);
    CHECK(side_mass(dir).value == doctest::Approx(pred).epsilon(0.05));
    double wsum = 0.0;
    for (double w : dir.weights) wsum += w;
    CHECK(wsum == doctest::Approx(t.side_length(side)).epsilon(1e-12));

    NeumannTrace var = fem_trace_variational(mesh, sys, e, side);
    CHECK(side_mass(var).value == doctest::Approx(pred).epsilon(0.005));
    wsum = 0.0;
    for (double w : var.weights) wsum += w;
    CHECK(wsum == doctest::Approx(t.side_length(side)).epsilon(1e-12));
  }
}

TEST_CASE("variational trace dominates the direct trace, levels 3-5") {
  Triangle t = right_isosceles_pi();
  for (int level : {3, 4, 5}) {
    Mesh mesh = refine_mesh(t, level, Degree::p2);
    AssembledSystem sys = assemble(mesh);
    auto pairs = solve_lowest_eigenpairs(sys.K, sys.M, 1, 1e-9);
    const EigenPair& e = pairs[0];
    for (int s = 0; s < 3; ++s) {
      const SideId side = static_cast<SideId>(s);
      const double pred = predicted_neumann_mass(t, side);
      const double err_dir =
          std::abs(side_mass(fem_trace_direct(mesh, e, side)).value - pred);
      const double err_var = std::abs(
          side_mass(fem_trace_variational(mesh, sys, e, side)).value - pred);
      CHECK(err_var <= err_dir);
    }
  }
}

TEST_CASE("recovered flux satisfies the constant-test-function identity") {
  // sum over sides of int g = -lambda int u  (v = 1 in the defining relation)
  Triangle t = right_isosceles_pi();
  Mesh mesh = refine_mesh(t, 4, Degree::p2);
  AssembledSystem sys = assemble(mesh);
  auto pairs = solve_lowest_eigenpairs(sys.K, sys.M, 2, 1e-9);
  for (const EigenPair& e : pairs) {
    double flux_integral = 0.0;
    for (int s = 0; s < 3; ++s) {
      NeumannTrace tr =
          fem_trace_variational(mesh, sys, e, static_cast<SideId>(s));
      for (std::size_t i = 0; i < tr.flux.size(); ++i)
        flux_integral += tr.weights[i] * tr.flux[i] / e.h;  // unscale h
    }
    // int_T u_h dV = 1_f^T M_ff u + 1_b^T M_bf u
    Eigen::VectorXd mf = sys.M * e.coefficients;
    Eigen::VectorXd mb = sys.M_bf * e.coefficients;
    const double u_integral = mf.sum() + mb.sum();
    CHECK(flux_integral ==
          doctest::Approx(-e.lambda * u_integral).epsilon(1e-8));
  }
}

TEST_CASE("direct FEM flux is piecewise polynomial of degree deg-1 per edge") {
  // P1: elementwise-constant gradient, so the flux is constant on each edge.
  Triangle t = right_isosceles_pi();
  Mesh mesh = refine_mesh(t, 2, Degree::p1);
  AssembledSystem sys = assemble(mesh);
  auto pairs = solve_lowest_eigenpairs(sys.K, sys.M, 1, 1e-9);
  NeumannTrace tr = fem_trace_direct(mesh, pairs[0], SideId::A, 4);
  REQUIRE(tr.flux.size() % 4 == 0);
  for (std::size_t e = 0; e < tr.flux.size() / 4; ++e)
    for (int i = 1; i < 4; ++i)
      CHECK(tr.flux[4 * e + i] == doctest::Approx(tr.flux[4 * e]).epsilon(1e-12));
}
