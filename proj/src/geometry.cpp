#include "neumass/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "neumass/errors.hpp"

namespace neumass {

const char* to_string(SideId s) {
  switch (s) {
    case SideId::A: return "A";
    case SideId::B: return "B";
    case SideId::C: return "C";
  }
  return "?";
}

int Triangle::opposite_vertex(SideId s) const {
  const auto& e = side_ends(s);
  return 3 - e[0] - e[1];
}

Triangle triangle_from_vertices(Vec2 p0, Vec2 p1, Vec2 p2) {
  std::array<Vec2, 3> v = {p0, p1, p2};
  double scale = 0.0;
  for (const auto& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw NonFiniteInput("triangle_from_vertices: non-finite coordinate");
    scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  }
  double twice_area = (v[1] - v[0]).cross(v[2] - v[0]);
  Triangle t;
  t.reflected = twice_area < 0.0;
  if (t.reflected) {
    std::swap(v[1], v[2]);
    twice_area = -twice_area;
  }
  t.area = 0.5 * twice_area;
  if (t.area < 1e-12 * scale * scale)
    throw DegenerateTriangle("triangle_from_vertices: collinear vertices");
  t.vertices = v;

  // Edge k runs from vertex k to vertex k+1.
  std::array<double, 3> len;
  for (int k = 0; k < 3; ++k) len[k] = (v[(k + 1) % 3] - v[k]).norm();
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return len[i] < len[j]; });
  for (int r = 0; r < 3; ++r) {
    int k = order[r];
    t.side_lengths[r] = len[k];
    t.side_vertices[r] = {k, (k + 1) % 3};
  }
  t.perimeter = len[0] + len[1] + len[2];
  if (t.side_lengths[0] + t.side_lengths[1] <= t.side_lengths[2])
    throw DegenerateTriangle("triangle_from_vertices: triangle inequality fails");
  return t;
}

double predicted_neumann_mass(const Triangle& t, SideId side) {
  return t.side_length(side) / t.area;
}

Isometry Isometry::inverse() const {
  // R orthogonal, so R^{-1} = R^T.
  Isometry inv;
  inv.R = {{{R[0][0], R[1][0]}, {R[0][1], R[1][1]}}};
  inv.t = {-(inv.R[0][0] * t.x + inv.R[0][1] * t.y),
           -(inv.R[1][0] * t.x + inv.R[1][1] * t.y)};
  return inv;
}

int CanonicalFrame::role_of(SideId s) const {
  for (int r = 0; r < 3; ++r)
    if (side_for_role[r] == s) return r;
  return -1;
}

namespace {

// Orthogonal map sending unit vector d to unit vector f, either a pure
// rotation or a reflection, chosen so that a second pair (d2, f2) matches.
Isometry orthogonal_from_pairs(Vec2 d, Vec2 f, Vec2 d2, Vec2 f2) {
  auto build = [&](double sign) {
    Isometry m;
    Vec2 dp = d.perp(), fp = f.perp();
    m.R[0][0] = f.x * d.x + sign * fp.x * dp.x;
    m.R[0][1] = f.x * d.y + sign * fp.x * dp.y;
    m.R[1][0] = f.y * d.x + sign * fp.y * dp.x;
    m.R[1][1] = f.y * d.y + sign * fp.y * dp.y;
    return m;
  };
  Isometry rot = build(1.0);
  Vec2 img = rot.apply(d2);
  if ((img - f2).norm() < 1e-9) return rot;
  return build(-1.0);
}

}  // namespace

CanonicalFrame canonicalize(const Triangle& t, SideId which_side_is_A) {
  CanonicalFrame f;
  const SideId sa = which_side_is_A;
  const double a = t.side_length(sa);
  f.ell = 2.0 * t.area / a;

  const int ip = t.opposite_vertex(sa);
  const Vec2 P = t.vertices[ip];
  Vec2 q0 = t.side_endpoint(sa, 0);
  Vec2 q1 = t.side_endpoint(sa, 1);
  int iq0 = t.side_ends(sa)[0], iq1 = t.side_ends(sa)[1];
  // Q_b: the A-endpoint nearer to P (its opposite side gets role B).
  if ((q1 - P).norm() < (q0 - P).norm()) {
    std::swap(q0, q1);
    std::swap(iq0, iq1);
  }
  const double b = (q0 - P).norm();
  const double c = (q1 - P).norm();

  // Roles: side opposite iq1 (containing P and q0) has length b.
  auto side_with_ends = [&](int u, int v) {
    for (int s = 0; s < 3; ++s) {
      const auto& e = t.side_vertices[s];
      if ((e[0] == u && e[1] == v) || (e[0] == v && e[1] == u))
        return static_cast<SideId>(s);
    }
    throw FrameMismatch("canonicalize: side lookup failed");
  };
  f.side_for_role = {sa, side_with_ends(ip, iq0), side_with_ends(ip, iq1)};
  f.role_lengths = {a, b, c};

  // Foot of the perpendicular from P, as a parameter along q0 -> q1.
  const double tf = (P - q0).dot(q1 - q0) / (a * a);
  const double tol = 1e-12;
  f.frame_case = (tf >= -tol) ? FrameCase::acute_or_right : FrameCase::obtuse;

  std::array<Vec2, 3> target;  // frame coords of P, q0, q1
  target[0] = {0.0, 0.0};
  if (f.frame_case == FrameCase::acute_or_right) {
    f.a1 = std::max(0.0, tf) * a;
    f.a2 = a - f.a1;
    target[1] = {f.ell, -f.a1};
    target[2] = {f.ell, f.a2};
  } else {
    f.a1 = -tf * a;
    f.a2 = a + f.a1;
    target[1] = {f.ell, f.a1};
    target[2] = {f.ell, f.a2};
  }

  Vec2 db = (q0 - P).normalized();
  Vec2 dc = (q1 - P).normalized();
  Vec2 fb = (target[1] - target[0]) * (1.0 / b);
  Vec2 fc = (target[2] - target[0]) * (1.0 / c);
  f.isometry = orthogonal_from_pairs(db, fb, dc, fc);
  f.isometry.t = target[0] - f.isometry.apply(P) + f.isometry.t;

  for (int i = 0; i < 3; ++i)
    f.frame_vertices[i] = f.isometry.apply(t.vertices[i]);
  return f;
}

CanonicalFrame canonicalize(const Triangle& t) {
  return canonicalize(t, SideId::A);
}

std::array<SideFrame, 3> side_frames(const Triangle& t, const CanonicalFrame& f) {
  std::array<SideFrame, 3> out;
  const double ell = f.ell, a1 = f.a1, a2 = f.a2;
  const double b = f.b(), c = f.c();

  SideFrame& fa = out[0];
  fa.side_id = f.side_for_role[0];
  fa.length = f.a();
  fa.normal = {1.0, 0.0};
  fa.speed = 1.0;

  SideFrame& fbf = out[1];
  fbf.side_id = f.side_for_role[1];
  fbf.length = b;
  fbf.speed = b / ell;

  SideFrame& fcf = out[2];
  fcf.side_id = f.side_for_role[2];
  fcf.length = c;
  fcf.speed = c / ell;

  if (f.frame_case == FrameCase::acute_or_right) {
    fa.tangent = {0.0, -1.0};  // A traversed downward (clockwise A,B,C)
    fbf.tangent = {-ell / b, a1 / b};
    fbf.normal = {-a1 / b, -ell / b};
    fcf.tangent = {ell / c, a2 / c};
    fcf.normal = {-a2 / c, ell / c};
  } else {
    fa.tangent = {0.0, -1.0};
    fbf.tangent = {-ell / b, -a1 / b};
    fbf.normal = {a1 / b, -ell / b};
    fcf.tangent = {ell / c, a2 / c};  // a2 = a + a1
    fcf.normal = {-a2 / c, ell / c};
  }

  // Outward check against the frame centroid.
  Vec2 centroid = (f.frame_vertices[0] + f.frame_vertices[1] + f.frame_vertices[2]) *
                  (1.0 / 3.0);
  std::array<Vec2, 3> mids;
  mids[0] = {ell, f.frame_case == FrameCase::acute_or_right
                      ? 0.5 * (a2 - a1)
                      : a1 + 0.5 * f.a()};
  mids[1] = (f.frame_case == FrameCase::acute_or_right)
                ? Vec2{0.5 * ell, -0.5 * a1}
                : Vec2{0.5 * ell, 0.5 * a1};
  mids[2] = {0.5 * ell, 0.5 * a2};
  for (int r = 0; r < 3; ++r) {
    if (out[r].normal.dot(mids[r] - centroid) < 0.0)
      throw FrameMismatch("side_frames: inward normal");
  }
  return out;
}

}  // namespace neumass
