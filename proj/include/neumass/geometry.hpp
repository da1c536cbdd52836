#pragma once

#include <array>
#include <cmath>
#include <string>

namespace neumass {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    double n = norm();
    return {x / n, y / n};
  }
  Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Side labels follow sorted lengths: |A| <= |B| <= |C|.
enum class SideId { A = 0, B = 1, C = 2 };

const char* to_string(SideId s);

struct Triangle {
  std::array<Vec2, 3> vertices;          // counterclockwise
  std::array<double, 3> side_lengths;    // ascending, indexed by SideId
  std::array<std::array<int, 2>, 3> side_vertices;  // endpoints per SideId
  double area = 0.0;
  double perimeter = 0.0;
  bool reflected = false;  // input orientation was clockwise

  double side_length(SideId s) const { return side_lengths[static_cast<int>(s)]; }
  const std::array<int, 2>& side_ends(SideId s) const {
    return side_vertices[static_cast<int>(s)];
  }
  Vec2 side_endpoint(SideId s, int which) const {
    return vertices[side_ends(s)[which]];
  }
  Vec2 centroid() const {
    return (vertices[0] + vertices[1] + vertices[2]) * (1.0 / 3.0);
  }
  // Vertex opposite a side (the one not on it).
  int opposite_vertex(SideId s) const;
};

Triangle triangle_from_vertices(Vec2 p0, Vec2 p1, Vec2 p2);

// Theorem prediction |S| / Area, units 1/length.
double predicted_neumann_mass(const Triangle& t, SideId side);

enum class FrameCase { acute_or_right, obtuse };

// Orthogonal map y = R x + t; R may include a reflection.
struct Isometry {
  std::array<std::array<double, 2>, 2> R{{{1, 0}, {0, 1}}};
  Vec2 t;

  Vec2 apply(Vec2 p) const {
    return {R[0][0] * p.x + R[0][1] * p.y + t.x,
            R[1][0] * p.x + R[1][1] * p.y + t.y};
  }
  Isometry inverse() const;
  double det() const { return R[0][0] * R[1][1] - R[0][1] * R[1][0]; }
};

// Frame roles: A is the side placed at {x = ell}, B and C the sides meeting
// at the origin with |B| <= |C|.
struct CanonicalFrame {
  double ell = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;  // obtuse case: a2 = a + a1 (top endpoint of A)
  FrameCase frame_case = FrameCase::acute_or_right;
  Isometry isometry;

  std::array<SideId, 3> side_for_role;   // triangle SideId playing role A/B/C
  std::array<double, 3> role_lengths;    // a, b, c in the frame's sense
  std::array<Vec2, 3> frame_vertices;    // isometry applied to triangle vertices

  double a() const { return role_lengths[0]; }
  double b() const { return role_lengths[1]; }
  double c() const { return role_lengths[2]; }
  int role_of(SideId s) const;
};

CanonicalFrame canonicalize(const Triangle& t, SideId which_side_is_A);
// Default: A = the shortest side.
CanonicalFrame canonicalize(const Triangle& t);

struct SideFrame {
  SideId side_id;
  Vec2 tangent;
  Vec2 normal;       // outward
  double speed = 1;  // arclength parameter: c/ell on role C, b/ell on role B
  double length = 0;
};

// Frames of the three sides in frame coordinates, indexed by frame role.
std::array<SideFrame, 3> side_frames(const Triangle& t, const CanonicalFrame& f);

}  // namespace neumass
