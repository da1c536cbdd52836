#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "neumass/geometry.hpp"

namespace neumass {

enum class Degree { p1 = 1, p2 = 2 };

struct BoundaryEdge {
  std::array<int, 2> nodes;  // vertex endpoints, oriented with the side
  int midpoint = -1;         // edge-midpoint node (degree 2), else -1
  int element = -1;          // adjacent element
  SideId side;
};

// Uniform 4-way refinement of a single triangle into a structured
// barycentric grid. Vertex nodes first, then (degree 2) edge midpoints.
struct Mesh {
  Triangle triangle;
  Degree degree = Degree::p1;
  int refinement_level = 0;

  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> elements;  // vertex-node triples, CCW
  std::vector<std::array<int, 3>> element_midpoints;  // degree 2 only;
      // entry e[k] is the midpoint node of the edge opposite local vertex k
  std::vector<BoundaryEdge> boundary_edges;

  std::vector<bool> on_boundary;  // per node
  std::vector<int> free_index;    // node -> free dof index, -1 on boundary
  std::vector<int> free_nodes;    // free dof index -> node

  int num_free() const { return static_cast<int>(free_nodes.size()); }
  int nodes_per_element() const { return degree == Degree::p1 ? 3 : 6; }
  // All nodes of element e in local P1/P2 ordering (3 vertices, 3 midpoints).
  std::array<int, 6> element_nodes(int e) const;
};

Mesh refine_mesh(const Triangle& t, int level, Degree degree);

// OFF-format dump (vertex nodes and elements only).
void write_off(const Mesh& m, std::ostream& os);

}  // namespace neumass
