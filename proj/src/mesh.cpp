#include "neumass/mesh.hpp"

#include <map>
#include <utility>

#include "neumass/errors.hpp"

namespace neumass {

std::array<int, 6> Mesh::element_nodes(int e) const {
  std::array<int, 6> out{-1, -1, -1, -1, -1, -1};
  for (int k = 0; k < 3; ++k) out[k] = elements[e][k];
  if (degree == Degree::p2)
    for (int k = 0; k < 3; ++k) out[3 + k] = element_midpoints[e][k];
  return out;
}

Mesh refine_mesh(const Triangle& t, int level, Degree degree) {
  if (level < 0 || level > 10)
    throw RefinementTooDeep("refine_mesh: level must be in [0, 10]");

  Mesh m;
  m.triangle = t;
  m.degree = degree;
  m.refinement_level = level;

  const int N = 1 << level;
  const Vec2 v0 = t.vertices[0];
  const Vec2 e1 = t.vertices[1] - v0;
  const Vec2 e2 = t.vertices[2] - v0;

  // Vertex nodes on the barycentric lattice, rows of constant j.
  std::vector<int> row_offset(N + 2, 0);
  for (int j = 0; j <= N; ++j) row_offset[j + 1] = row_offset[j] + (N + 1 - j);
  auto idx = [&](int i, int j) { return row_offset[j] + i; };
  m.nodes.reserve(row_offset[N + 1]);
  for (int j = 0; j <= N; ++j)
    for (int i = 0; i <= N - j; ++i)
      m.nodes.push_back(v0 + e1 * (static_cast<double>(i) / N) +
                        e2 * (static_cast<double>(j) / N));

  // Up and down elements; up(i,j) appended first for each (i,j) scan row.
  std::map<std::pair<int, int>, int> up_elem;
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N - j; ++i) {
      up_elem[{i, j}] = static_cast<int>(m.elements.size());
      m.elements.push_back({idx(i, j), idx(i + 1, j), idx(i, j + 1)});
      if (i + j <= N - 2)
        m.elements.push_back({idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  }

  // Parent side containing each lattice boundary line.
  auto side_of = [&](int u, int v) {
    for (int s = 0; s < 3; ++s) {
      const auto& e = t.side_vertices[s];
      if ((e[0] == u && e[1] == v) || (e[0] == v && e[1] == u))
        return static_cast<SideId>(s);
    }
    throw FrameMismatch("refine_mesh: side lookup failed");
  };
  const SideId s01 = side_of(0, 1), s12 = side_of(1, 2), s20 = side_of(2, 0);

  for (int i = 0; i < N; ++i)
    m.boundary_edges.push_back({{idx(i, 0), idx(i + 1, 0)}, -1, up_elem[{i, 0}], s01});
  for (int i = N - 1; i >= 0; --i) {
    int j = N - 1 - i;
    m.boundary_edges.push_back(
        {{idx(i + 1, j), idx(i, j + 1)}, -1, up_elem[{i, j}], s12});
  }
  for (int j = N - 1; j >= 0; --j)
    m.boundary_edges.push_back({{idx(0, j + 1), idx(0, j)}, -1, up_elem[{0, j}], s20});

  // Degree-2 midpoint nodes, numbered after vertices in element scan order.
  if (degree == Degree::p2) {
    std::map<std::pair<int, int>, int> edge_mid;
    auto midpoint_of = [&](int u, int v) {
      auto key = std::minmax(u, v);
      auto it = edge_mid.find(key);
      if (it != edge_mid.end()) return it->second;
      int id = static_cast<int>(m.nodes.size());
      m.nodes.push_back((m.nodes[u] + m.nodes[v]) * 0.5);
      edge_mid[key] = id;
      return id;
    };
    m.element_midpoints.resize(m.elements.size());
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
      const auto& el = m.elements[e];
      for (int k = 0; k < 3; ++k)
        m.element_midpoints[e][k] = midpoint_of(el[(k + 1) % 3], el[(k + 2) % 3]);
    }
    for (auto& be : m.boundary_edges)
      be.midpoint = midpoint_of(be.nodes[0], be.nodes[1]);
  }

  m.on_boundary.assign(m.nodes.size(), false);
  for (const auto& be : m.boundary_edges) {
    m.on_boundary[be.nodes[0]] = true;
    m.on_boundary[be.nodes[1]] = true;
    if (be.midpoint >= 0) m.on_boundary[be.midpoint] = true;
  }
  m.free_index.assign(m.nodes.size(), -1);
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    if (!m.on_boundary[i]) {
      m.free_index[i] = static_cast<int>(m.free_nodes.size());
      m.free_nodes.push_back(static_cast<int>(i));
    }
  }
  return m;
}

void write_off(const Mesh& m, std::ostream& os) {
  // Only vertex nodes; midpoints (appended last) are not OFF geometry.
  int max_vertex = -1;
  for (const auto& el : m.elements)
    for (int k = 0; k < 3; ++k) max_vertex = std::max(max_vertex, el[k]);
  const auto vertex_count = static_cast<std::size_t>(max_vertex + 1);

  os << "OFF\n" << vertex_count << ' ' << m.elements.size() << " 0\n";
  for (std::size_t i = 0; i < vertex_count; ++i)
    os << m.nodes[i].x << ' ' << m.nodes[i].y << " 0\n";
  for (const auto& el : m.elements)
    os << "3 " << el[0] << ' ' << el[1] << ' ' << el[2] << '\n';
}

}  // namespace neumass
