#include "neumass/assembly.hpp"

#include <cstring>
#include <vector>

#include "neumass/quadrature.hpp"

namespace neumass {

namespace {

// Reference-triangle basis and gradients at (xi, eta).
void shape_functions(Degree degree, double xi, double eta, double phi[6],
                     double dxi[6], double deta[6]) {
  const double l0 = 1.0 - xi - eta, l1 = xi, l2 = eta;
  if (degree == Degree::p1) {
    phi[0] = l0; phi[1] = l1; phi[2] = l2;
    dxi[0] = -1; dxi[1] = 1; dxi[2] = 0;
    deta[0] = -1; deta[1] = 0; deta[2] = 1;
    return;
  }
  phi[0] = l0 * (2 * l0 - 1);
  phi[1] = l1 * (2 * l1 - 1);
  phi[2] = l2 * (2 * l2 - 1);
  phi[3] = 4 * l1 * l2;  // midpoint opposite vertex 0
  phi[4] = 4 * l2 * l0;
  phi[5] = 4 * l0 * l1;
  dxi[0] = 1 - 4 * l0; deta[0] = 1 - 4 * l0;
  dxi[1] = 4 * l1 - 1; deta[1] = 0;
  dxi[2] = 0;          deta[2] = 4 * l2 - 1;
  dxi[3] = 4 * l2;     deta[3] = 4 * l1;
  dxi[4] = -4 * l2;    deta[4] = 4 * (l0 - l2);
  dxi[5] = 4 * (l0 - l1); deta[5] = -4 * l1;
}

}  // namespace

ElementMatrices element_matrices(const Mesh& mesh, int element) {
  const auto& el = mesh.elements[element];
  const Vec2 p0 = mesh.nodes[el[0]];
  const Vec2 e1 = mesh.nodes[el[1]] - p0;
  const Vec2 e2 = mesh.nodes[el[2]] - p0;
  const double detJ = e1.cross(e2);  // positive, CCW elements
  // Inverse-transpose Jacobian rows for gradient mapping.
  const double ixx = e2.y / detJ, ixy = -e2.x / detJ;
  const double iyx = -e1.y / detJ, iyy = e1.x / detJ;

  const int nl = mesh.nodes_per_element();
  ElementMatrices out;
  std::memset(out.k, 0, sizeof(out.k));
  std::memset(out.m, 0, sizeof(out.m));

  static const QuadRule2D quad = triangle_degree5();
  double phi[6], dxi[6], deta[6], gx[6], gy[6];
  for (std::size_t q = 0; q < quad.w.size(); ++q) {
    shape_functions(mesh.degree, quad.x[q], quad.y[q], phi, dxi, deta);
    for (int a = 0; a < nl; ++a) {
      gx[a] = ixx * dxi[a] + iyx * deta[a];
      gy[a] = ixy * dxi[a] + iyy * deta[a];
    }
    const double w = quad.w[q] * detJ;
    for (int a = 0; a < nl; ++a) {
      for (int b = 0; b < nl; ++b) {
        out.k[a][b] += w * (gx[a] * gx[b] + gy[a] * gy[b]);
        out.m[a][b] += w * phi[a] * phi[b];
      }
    }
  }
  return out;
}

namespace {

AssembledSystem scatter(const Mesh& mesh,
                        const std::vector<ElementMatrices>& local) {
  AssembledSystem sys;
  sys.boundary_index.assign(mesh.nodes.size(), -1);
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    if (mesh.on_boundary[i]) {
      sys.boundary_index[i] = static_cast<int>(sys.boundary_nodes.size());
      sys.boundary_nodes.push_back(static_cast<int>(i));
    }
  }
  const int nf = mesh.num_free();
  const int nb = static_cast<int>(sys.boundary_nodes.size());
  const int nl = mesh.nodes_per_element();

  using Trip = Eigen::Triplet<double>;
  std::vector<Trip> tk, tm, tkb, tmb;
  tk.reserve(local.size() * nl * nl);
  tm.reserve(local.size() * nl * nl);
  for (std::size_t e = 0; e < local.size(); ++e) {
    const auto gn = mesh.element_nodes(static_cast<int>(e));
    for (int a = 0; a < nl; ++a) {
      const int fa = mesh.free_index[gn[a]];
      const int ba = sys.boundary_index[gn[a]];
      for (int b = 0; b < nl; ++b) {
        const int fb = mesh.free_index[gn[b]];
        if (fb < 0) continue;
        if (fa >= 0) {
          tk.emplace_back(fa, fb, local[e].k[a][b]);
          tm.emplace_back(fa, fb, local[e].m[a][b]);
        } else {
          tkb.emplace_back(ba, fb, local[e].k[a][b]);
          tmb.emplace_back(ba, fb, local[e].m[a][b]);
        }
      }
    }
  }
  sys.K.resize(nf, nf);
  sys.M.resize(nf, nf);
  sys.K_bf.resize(nb, nf);
  sys.M_bf.resize(nb, nf);
  sys.K.setFromTriplets(tk.begin(), tk.end());
  sys.M.setFromTriplets(tm.begin(), tm.end());
  sys.K_bf.setFromTriplets(tkb.begin(), tkb.end());
  sys.M_bf.setFromTriplets(tmb.begin(), tmb.end());
  return sys;
}

}  // namespace

AssembledSystem assemble(const Mesh& mesh) {
  const int ne = static_cast<int>(mesh.elements.size());
  std::vector<ElementMatrices> local(ne);
#pragma omp parallel for schedule(static)
  for (int e = 0; e < ne; ++e) local[e] = element_matrices(mesh, e);
  return scatter(mesh, local);
}

AssembledSystem assemble_serial(const Mesh& mesh) {
  const int ne = static_cast<int>(mesh.elements.size());
  std::vector<ElementMatrices> local(ne);
  for (int e = 0; e < ne; ++e) local[e] = element_matrices(mesh, e);
  return scatter(mesh, local);
}

}  // namespace neumass
