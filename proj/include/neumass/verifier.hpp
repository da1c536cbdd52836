#pragma once

#include <array>

#include "neumass/trace.hpp"

namespace neumass {

struct SideReport {
  SideId id;
  double length = 0.0;
  double mass = 0.0;       // computed I_S
  double predicted = 0.0;  // |S| / Area
  double abs_residual = 0.0;
  double rel_residual = 0.0;
};

struct ReportMeta {
  double lambda = 0.0;
  double h = 0.0;
  TraceMethod method = TraceMethod::analytic;
  FrameCase frame_case = FrameCase::acute_or_right;
};

struct IdentityReport {
  std::array<SideReport, 3> sides;  // indexed by SideId
  double total_mass = 0.0;
  double total_predicted = 0.0;  // perimeter / Area
  ReportMeta meta;
};

IdentityReport identity_report(const Triangle& t,
                               const std::vector<SideMass>& masses,
                               const ReportMeta& meta);

// The boundary pairing 2 = (ell+m) I_A + (...) I_B + (...) I_C realized as
// an affine function of the vector-field parameters (m, n).
struct RellichPairing {
  double m = 0.0, n = 0.0;
  double value = 0.0;
  static constexpr double expected = 2.0;
  double c0 = 0.0, cm = 0.0, cn = 0.0;  // value = c0 + cm*m + cn*n
};

RellichPairing rellich_pairing(const CanonicalFrame& frame,
                               const std::array<SideMass, 3>& masses, double m,
                               double n);

struct DerivativeResiduals {
  double residual_m = 0.0;  // |I_A -+ (a1/b) I_B - (a2/c or (a+a1)/c) I_C|
  double residual_n = 0.0;  // |-(ell/b) I_B + (ell/c) I_C|
};

DerivativeResiduals master_derivative_checks(const CanonicalFrame& frame,
                                             const std::array<SideMass, 3>& masses);

// Closed-form solution of the master system: I_A = 2/ell and the back
// substitutions, returned per SideId. Equals |S|/Area for every side.
std::array<double, 3> solve_masses_from_master(const CanonicalFrame& frame);

// Direct quadrature of the boundary pairing integral
// int_bdry (h X u)(h d_nu u) dS from analytic gradients; exercises the
// tangential-derivative elimination rather than the precomputed masses.
double rellich_pairing_boundary_integral(const ClosedFormEigenfunction& f,
                                         const Triangle& domain, double m,
                                         double n, int quad_order);

// Interior identity 2 = -2 int (h^2 Lap u) conj(u): evaluates as 2 int u^2
// by quadrature (analytic) or 2 u^T M u (discrete).
double interior_identity_analytic(const ClosedFormEigenfunction& f, int order);
double interior_identity_fem(const EigenPair& e, const SpMat& M);

}  // namespace neumass
