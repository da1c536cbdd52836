#include "neumass/verifier.hpp"

#include <cmath>

#include "neumass/errors.hpp"
#include "neumass/quadrature.hpp"

namespace neumass {

IdentityReport identity_report(const Triangle& t,
                               const std::vector<SideMass>& masses,
                               const ReportMeta& meta) {
  IdentityReport rep;
  rep.meta = meta;
  std::array<bool, 3> seen{false, false, false};
  for (const auto& sm : masses) {
    const int i = static_cast<int>(sm.side_id);
    if (seen[i]) throw MissingSide("identity_report: duplicate side mass");
    seen[i] = true;
    SideReport& sr = rep.sides[i];
    sr.id = sm.side_id;
    sr.length = t.side_length(sm.side_id);
    sr.mass = sm.value;
    sr.predicted = predicted_neumann_mass(t, sm.side_id);
    sr.abs_residual = std::abs(sr.mass - sr.predicted);
    sr.rel_residual = sr.abs_residual / sr.predicted;
    rep.total_mass += sr.mass;
    rep.total_predicted += sr.predicted;
  }
  if (!(seen[0] && seen[1] && seen[2]))
    throw MissingSide("identity_report: need one mass per side");
  return rep;
}

namespace {

// Masses rearranged into frame-role order (A, B, C).
std::array<double, 3> role_masses(const CanonicalFrame& frame,
                                  const std::array<SideMass, 3>& masses) {
  std::array<double, 3> out{};
  std::array<bool, 3> seen{false, false, false};
  for (const auto& sm : masses) {
    const int r = frame.role_of(sm.side_id);
    if (r < 0 || seen[r])
      throw FrameMismatch("side labels disagree with the frame");
    seen[r] = true;
    out[r] = sm.value;
  }
  if (!(seen[0] && seen[1] && seen[2]))
    throw FrameMismatch("side labels disagree with the frame");
  return out;
}

}  // namespace

RellichPairing rellich_pairing(const CanonicalFrame& frame,
                               const std::array<SideMass, 3>& masses, double m,
                               double n) {
  const auto im = role_masses(frame, masses);
  const double ia = im[0], ib = im[1], ic = im[2];
  const double ell = frame.ell, a1 = frame.a1, a2 = frame.a2;
  const double b = frame.b(), c = frame.c();

  RellichPairing p;
  p.m = m;
  p.n = n;
  p.c0 = ell * ia;
  if (frame.frame_case == FrameCase::acute_or_right) {
    p.cm = ia - (a1 / b) * ib - (a2 / c) * ic;
    p.cn = -(ell / b) * ib + (ell / c) * ic;
  } else {
    // Obtuse master equation: a2 plays the role of a + a1.
    p.cm = ia + (a1 / b) * ib - (a2 / c) * ic;
    p.cn = -(ell / b) * ib + (ell / c) * ic;
  }
  p.value = p.c0 + p.cm * m + p.cn * n;
  return p;
}

DerivativeResiduals master_derivative_checks(
    const CanonicalFrame& frame, const std::array<SideMass, 3>& masses) {
  RellichPairing p = rellich_pairing(frame, masses, 0.0, 0.0);
  DerivativeResiduals r;
  r.residual_m = std::abs(p.cm);
  r.residual_n = std::abs(p.cn);
  return r;
}

std::array<double, 3> solve_masses_from_master(const CanonicalFrame& frame) {
  const double ell = frame.ell;
  const double a = frame.a(), b = frame.b(), c = frame.c();
  const double ic = 2.0 * c / (a * ell);
  const double ib = (b / c) * ic;
  const double ia = 2.0 / ell;
  std::array<double, 3> out{};
  out[static_cast<int>(frame.side_for_role[0])] = ia;
  out[static_cast<int>(frame.side_for_role[1])] = ib;
  out[static_cast<int>(frame.side_for_role[2])] = ic;
  return out;
}

double rellich_pairing_boundary_integral(const ClosedFormEigenfunction& f,
                                         const Triangle& domain, double m,
                                         double n, int quad_order) {
  double total = 0.0;
  for (int s = 0; s < 3; ++s) {
    const SideId side = static_cast<SideId>(s);
    const Vec2 p0 = domain.side_endpoint(side, 0);
    const Vec2 p1 = domain.side_endpoint(side, 1);
    const double len = (p1 - p0).norm();
    const Vec2 tangent = (p1 - p0) * (1.0 / len);
    Vec2 normal{tangent.y, -tangent.x};
    if (normal.dot(0.5 * (p0 + p1) - domain.centroid()) < 0.0)
      normal = {-normal.x, -normal.y};
    const QuadRule1D q = gauss_legendre(quad_order, 0.0, len);
    for (int i = 0; i < quad_order; ++i) {
      const Vec2 p = p0 + tangent * q.nodes[i];
      const Vec2 g = f.gradient(p);
      const double hxu = f.h * ((p.x + m) * g.x + (p.y + n) * g.y);
      const double hnu = f.h * normal.dot(g);
      total += q.weights[i] * hxu * hnu;
    }
  }
  return total;
}

double interior_identity_analytic(const ClosedFormEigenfunction& f, int order) {
  if (f.family == Family::square_2pi) {
    const QuadRule1D q = gauss_legendre(order, 0.0, 2.0 * M_PI);
    double acc = 0.0;
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) {
        double u = f.value({q.nodes[i], q.nodes[j]});
        acc += q.weights[i] * q.weights[j] * u * u;
      }
    return 2.0 * acc;
  }
  const Triangle t = f.domain_triangle();
  const QuadRule2D q = triangle_gauss(order);
  const Vec2 v0 = t.vertices[0];
  const Vec2 e1 = t.vertices[1] - v0, e2 = t.vertices[2] - v0;
  const double jac = e1.cross(e2);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.w.size(); ++i) {
    Vec2 p = v0 + e1 * q.x[i] + e2 * q.y[i];
    double u = f.value(p);
    acc += q.w[i] * u * u;
  }
  return 2.0 * acc * jac;
}

double interior_identity_fem(const EigenPair& e, const SpMat& M) {
  return 2.0 * e.coefficients.dot(M * e.coefficients);
}

}  // namespace neumass
