#include "neumass/trace.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>

#include "neumass/errors.hpp"
#include "neumass/quadrature.hpp"

namespace neumass {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

const char* to_string(TraceMethod m) {
  switch (m) {
    case TraceMethod::analytic: return "analytic";
    case TraceMethod::fem_direct: return "fem_direct";
    case TraceMethod::fem_variational: return "fem_variational";
  }
  return "?";
}

NeumannTrace analytic_trace(const ClosedFormEigenfunction& f,
                            const Triangle& domain, SideId side,
                            int quad_order) {
  if (quad_order < 2) throw std::invalid_argument("analytic_trace: order < 2");
  const Triangle own = f.domain_triangle();
  const double scale = own.side_lengths[2];
  for (int i = 0; i < 3; ++i) {
    bool matched = false;
    for (int j = 0; j < 3; ++j)
      matched = matched || (own.vertices[i] - domain.vertices[j]).norm() <= 1e-12 * scale;
    if (!matched)
      throw GeometryMismatch("analytic_trace: domain differs from the family's");
  }

  const Vec2 p0 = domain.side_endpoint(side, 0);
  const Vec2 p1 = domain.side_endpoint(side, 1);
  const double len = (p1 - p0).norm();
  const Vec2 tangent = (p1 - p0) * (1.0 / len);
  Vec2 normal{tangent.y, -tangent.x};  // CCW boundary, outward to the right
  if (normal.dot(0.5 * (p0 + p1) - domain.centroid()) < 0.0)
    normal = {-normal.x, -normal.y};

  NeumannTrace tr;
  tr.side_id = side;
  tr.method = TraceMethod::analytic;
  tr.side_length = len;
  const QuadRule1D q = gauss_legendre(quad_order, 0.0, len);
  tr.nodes = q.nodes;
  tr.weights = q.weights;
  tr.flux.resize(q.nodes.size());
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    Vec2 p = p0 + tangent * q.nodes[i];
    tr.flux[i] = f.h * normal.dot(f.gradient(p));
  }
  return tr;
}

NeumannTrace analytic_square_trace(const ClosedFormEigenfunction& f,
                                   SquareSide side, int quad_order) {
  if (f.family != Family::square_2pi)
    throw GeometryMismatch("analytic_square_trace: not a square-family mode");
  if (quad_order < 2)
    throw std::invalid_argument("analytic_square_trace: order < 2");

  Vec2 start, tangent, normal;
  switch (side) {
    case SquareSide::x0: start = {0, 0}; tangent = {0, 1}; normal = {-1, 0}; break;
    case SquareSide::x2pi: start = {kTwoPi, 0}; tangent = {0, 1}; normal = {1, 0}; break;
    case SquareSide::y0: start = {0, 0}; tangent = {1, 0}; normal = {0, -1}; break;
    case SquareSide::y2pi: start = {0, kTwoPi}; tangent = {1, 0}; normal = {0, 1}; break;
  }
  NeumannTrace tr;
  tr.side_id = SideId::A;  // label unused for the square
  tr.method = TraceMethod::analytic;
  tr.side_length = kTwoPi;
  const QuadRule1D q = gauss_legendre(quad_order, 0.0, kTwoPi);
  tr.nodes = q.nodes;
  tr.weights = q.weights;
  tr.flux.resize(q.nodes.size());
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    Vec2 p = start + tangent * q.nodes[i];
    tr.flux[i] = f.h * normal.dot(f.gradient(p));
  }
  return tr;
}

namespace {

// Gradient of the discrete function at a physical point inside an element.
Vec2 fem_gradient_at(const Mesh& mesh, const EigenPair& e, int element, Vec2 p) {
  const auto& el = mesh.elements[element];
  const Vec2 p0 = mesh.nodes[el[0]];
  const Vec2 e1 = mesh.nodes[el[1]] - p0;
  const Vec2 e2 = mesh.nodes[el[2]] - p0;
  const double detJ = e1.cross(e2);
  const Vec2 d = p - p0;
  const double xi = (d.x * e2.y - d.y * e2.x) / detJ;
  const double eta = (e1.x * d.y - e1.y * d.x) / detJ;

  const double l0 = 1 - xi - eta, l1 = xi, l2 = eta;
  double dxi[6], deta[6];
  int nl = 3;
  dxi[0] = -1; dxi[1] = 1; dxi[2] = 0;
  deta[0] = -1; deta[1] = 0; deta[2] = 1;
  if (mesh.degree == Degree::p2) {
    nl = 6;
    dxi[0] = 1 - 4 * l0; deta[0] = 1 - 4 * l0;
    dxi[1] = 4 * l1 - 1; deta[1] = 0;
    dxi[2] = 0;          deta[2] = 4 * l2 - 1;
    dxi[3] = 4 * l2;     deta[3] = 4 * l1;
    dxi[4] = -4 * l2;    deta[4] = 4 * (l0 - l2);
    dxi[5] = 4 * (l0 - l1); deta[5] = -4 * l1;
  }
  const auto gn = mesh.element_nodes(element);
  double gxi = 0.0, geta = 0.0;
  for (int a = 0; a < nl; ++a) {
    const int fi = mesh.free_index[gn[a]];
    if (fi < 0) continue;  // Dirichlet node, coefficient 0
    const double ca = e.coefficients[fi];
    gxi += ca * dxi[a];
    geta += ca * deta[a];
  }
  return {(e2.y * gxi - e1.y * geta) / detJ, (-e2.x * gxi + e1.x * geta) / detJ};
}

struct SideEdges {
  std::vector<int> edges;  // indices into mesh.boundary_edges, in order
  double length = 0.0;
};

SideEdges edges_of_side(const Mesh& mesh, SideId side) {
  SideEdges out;
  for (std::size_t i = 0; i < mesh.boundary_edges.size(); ++i) {
    if (mesh.boundary_edges[i].side == side) {
      out.edges.push_back(static_cast<int>(i));
      const auto& be = mesh.boundary_edges[i];
      out.length += (mesh.nodes[be.nodes[1]] - mesh.nodes[be.nodes[0]]).norm();
    }
  }
  if (out.edges.empty()) throw MissingSide("no boundary edges tagged with side");
  return out;
}

}  // namespace

NeumannTrace fem_trace_direct(const Mesh& mesh, const EigenPair& e, SideId side,
                              int per_edge_order) {
  const SideEdges se = edges_of_side(mesh, side);
  NeumannTrace tr;
  tr.side_id = side;
  tr.method = TraceMethod::fem_direct;
  tr.side_length = se.length;

  const QuadRule1D base = gauss_legendre(per_edge_order);
  double arc = 0.0;
  for (int ei : se.edges) {
    const auto& be = mesh.boundary_edges[ei];
    const Vec2 q0 = mesh.nodes[be.nodes[0]];
    const Vec2 q1 = mesh.nodes[be.nodes[1]];
    const double elen = (q1 - q0).norm();
    const Vec2 tangent = (q1 - q0) * (1.0 / elen);
    const Vec2 normal{tangent.y, -tangent.x};  // boundary runs CCW
    for (int i = 0; i < per_edge_order; ++i) {
      const double s = 0.5 * (1.0 + base.nodes[i]) * elen;
      const Vec2 p = q0 + tangent * s;
      tr.nodes.push_back(arc + s);
      tr.weights.push_back(0.5 * base.weights[i] * elen);
      tr.flux.push_back(e.h * normal.dot(fem_gradient_at(mesh, e, be.element, p)));
    }
    arc += elen;
  }
  return tr;
}

Eigen::VectorXd recover_boundary_flux(const Mesh& mesh,
                                      const AssembledSystem& sys,
                                      const EigenPair& e) {
  const int nb = static_cast<int>(sys.boundary_nodes.size());
  Eigen::VectorXd rhs =
      sys.K_bf * e.coefficients - e.lambda * (sys.M_bf * e.coefficients);

  // 1-D mass matrix along the closed boundary polygon.
  using Trip = Eigen::Triplet<double>;
  std::vector<Trip> trips;
  const QuadRule1D q = gauss_legendre(3);  // exact through degree 5
  for (const auto& be : mesh.boundary_edges) {
    const double elen =
        (mesh.nodes[be.nodes[1]] - mesh.nodes[be.nodes[0]]).norm();
    int local[3] = {sys.boundary_index[be.nodes[0]],
                    sys.boundary_index[be.nodes[1]],
                    be.midpoint >= 0 ? sys.boundary_index[be.midpoint] : -1};
    const int nl = (mesh.degree == Degree::p2) ? 3 : 2;
    for (int iq = 0; iq < 3; ++iq) {
      const double t = 0.5 * (1.0 + q.nodes[iq]);  // in [0,1]
      const double w = 0.5 * q.weights[iq] * elen;
      double phi[3];
      if (nl == 2) {
        phi[0] = 1 - t;
        phi[1] = t;
      } else {
        phi[0] = (1 - t) * (1 - 2 * t);
        phi[1] = t * (2 * t - 1);
        phi[2] = 4 * t * (1 - t);
      }
      for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b)
          trips.emplace_back(local[a], local[b], w * phi[a] * phi[b]);
    }
  }
  SpMat Mb(nb, nb);
  Mb.setFromTriplets(trips.begin(), trips.end());
  Eigen::SimplicialLDLT<SpMat> chol(Mb);
  if (chol.info() != Eigen::Success)
    throw SingularBoundaryMass("recover_boundary_flux: boundary mass singular");
  return chol.solve(rhs);
}

NeumannTrace fem_trace_variational(const Mesh& mesh, const AssembledSystem& sys,
                                   const EigenPair& e, SideId side,
                                   int per_edge_order) {
  const Eigen::VectorXd g = recover_boundary_flux(mesh, sys, e);
  const SideEdges se = edges_of_side(mesh, side);

  NeumannTrace tr;
  tr.side_id = side;
  tr.method = TraceMethod::fem_variational;
  tr.side_length = se.length;

  const QuadRule1D base = gauss_legendre(per_edge_order);
  double arc = 0.0;
  for (int ei : se.edges) {
    const auto& be = mesh.boundary_edges[ei];
    const double elen =
        (mesh.nodes[be.nodes[1]] - mesh.nodes[be.nodes[0]]).norm();
    const double g0 = g[sys.boundary_index[be.nodes[0]]];
    const double g1 = g[sys.boundary_index[be.nodes[1]]];
    const double gm =
        be.midpoint >= 0 ? g[sys.boundary_index[be.midpoint]] : 0.0;
    for (int i = 0; i < per_edge_order; ++i) {
      const double t = 0.5 * (1.0 + base.nodes[i]);
      double val;
      if (mesh.degree == Degree::p2)
        val = g0 * (1 - t) * (1 - 2 * t) + g1 * t * (2 * t - 1) +
              gm * 4 * t * (1 - t);
      else
        val = g0 * (1 - t) + g1 * t;
      tr.nodes.push_back(arc + t * elen);
      tr.weights.push_back(0.5 * base.weights[i] * elen);
      tr.flux.push_back(e.h * val);
    }
    arc += elen;
  }
  return tr;
}

SideMass side_mass(const NeumannTrace& tr) {
  SideMass sm;
  sm.side_id = tr.side_id;
  sm.method = tr.method;
  double acc = 0.0;
  for (std::size_t i = 0; i < tr.flux.size(); ++i)
    acc += tr.weights[i] * tr.flux[i] * tr.flux[i];
  sm.value = acc;
  return sm;
}

}  // namespace neumass
