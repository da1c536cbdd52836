#pragma once

#include <vector>

#include "neumass/analytic.hpp"
#include "neumass/assembly.hpp"
#include "neumass/eigensolver.hpp"

namespace neumass {

enum class TraceMethod { analytic, fem_direct, fem_variational };

const char* to_string(TraceMethod m);

// Sampled semiclassical Neumann data h d_nu(u) on one side, with the
// quadrature that integrates it. Nodes are arclength positions from the
// side's first endpoint; Gauss nodes, so corners are never sampled.
struct NeumannTrace {
  SideId side_id;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> flux;
  TraceMethod method;
  double side_length = 0.0;
};

struct SideMass {
  SideId side_id;
  double value = 0.0;
  TraceMethod method;
};

NeumannTrace analytic_trace(const ClosedFormEigenfunction& f,
                            const Triangle& domain, SideId side,
                            int quad_order);

// Square-domain variant; side lengths are 2*pi.
NeumannTrace analytic_square_trace(const ClosedFormEigenfunction& f,
                                   SquareSide side, int quad_order);

// Flux from the raw elementwise gradient of the discrete eigenfunction,
// sampled at per-edge Gauss nodes.
NeumannTrace fem_trace_direct(const Mesh& mesh, const EigenPair& e, SideId side,
                              int per_edge_order = 4);

// Recovered flux g over all boundary dofs, solving
//   integral_bdry g v = integral K(u, v) - lambda integral M(u, v)
// for every boundary-node test function v. Unscaled by h.
Eigen::VectorXd recover_boundary_flux(const Mesh& mesh,
                                      const AssembledSystem& sys,
                                      const EigenPair& e);

// Superconvergent variational flux, sampled at per-edge Gauss nodes.
NeumannTrace fem_trace_variational(const Mesh& mesh, const AssembledSystem& sys,
                                   const EigenPair& e, SideId side,
                                   int per_edge_order = 4);

SideMass side_mass(const NeumannTrace& tr);

}  // namespace neumass
