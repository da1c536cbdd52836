#pragma once

#include <Eigen/Sparse>

#include "neumass/mesh.hpp"

namespace neumass {

using SpMat = Eigen::SparseMatrix<double>;

// Stiffness and mass over the free (interior) dofs, plus the
// boundary-row coupling blocks needed for variational flux recovery.
struct AssembledSystem {
  SpMat K;     // free x free
  SpMat M;     // free x free
  SpMat K_bf;  // boundary x free
  SpMat M_bf;  // boundary x free
  std::vector<int> boundary_nodes;  // boundary dof index -> mesh node
  std::vector<int> boundary_index;  // mesh node -> boundary dof index, -1 if free
};

// Per-element local matrices, nodes in local P1/P2 order.
struct ElementMatrices {
  double k[6][6];
  double m[6][6];
};

ElementMatrices element_matrices(const Mesh& mesh, int element);

// OpenMP-parallel assembly; the scatter is serial in element order so the
// result is bit-identical to assemble_serial.
AssembledSystem assemble(const Mesh& mesh);

// Single-threaded reference implementation.
AssembledSystem assemble_serial(const Mesh& mesh);

}  // namespace neumass
