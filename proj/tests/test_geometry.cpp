#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "neumass/errors.hpp"
#include "neumass/geometry.hpp"

using namespace neumass;

namespace {

Triangle tri345() { return triangle_from_vertices({0, 0}, {4, 0}, {0, 3}); }

Triangle equilateral2() {
  return triangle_from_vertices({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
}

// Brute-force foot-of-perpendicular projection, independent of canonicalize.
bool foot_outside_segment(Vec2 p, Vec2 q0, Vec2 q1) {
  const double t = (p - q0).dot(q1 - q0) / (q1 - q0).dot(q1 - q0);
  return t < 0.0 || t > 1.0;
}

}  // namespace

TEST_CASE("triangle_from_vertices examples") {
  Triangle t = tri345();
  CHECK(t.side_lengths[0] == doctest::Approx(3).epsilon(1e-14));
  CHECK(t.side_lengths[1] == doctest::Approx(4).epsilon(1e-14));
  CHECK(t.side_lengths[2] == doctest::Approx(5).epsilon(1e-14));
  CHECK(t.area == doctest::Approx(6).epsilon(1e-14));
  CHECK(t.perimeter == doctest::Approx(12).epsilon(1e-14));

  CHECK_THROWS_AS(triangle_from_vertices({0, 0}, {1, 0}, {2, 0}),
                  DegenerateTriangle);
  CHECK_THROWS_AS(triangle_from_vertices({0, 0}, {1, 0}, {0.5, 1e-15}),
                  DegenerateTriangle);
  CHECK_THROWS_AS(
      triangle_from_vertices({0, 0}, {1, 0},
                             {std::nan(""), 1}),
      NonFiniteInput);

  Triangle eq = equilateral2();
  for (int i = 0; i < 3; ++i)
    CHECK(eq.side_lengths[i] == doctest::Approx(2).epsilon(1e-14));
  CHECK(eq.area == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("stored vertices are counterclockwise, side lengths consistent") {
  Triangle t = triangle_from_vertices({0, 0}, {0, 3}, {4, 0});  // clockwise input
  CHECK(t.reflected);
  CHECK((t.vertices[1] - t.vertices[0]).cross(t.vertices[2] - t.vertices[0]) > 0);
  for (int s = 0; s < 3; ++s) {
    const SideId id = static_cast<SideId>(s);
    const double d = (t.side_endpoint(id, 1) - t.side_endpoint(id, 0)).norm();
    CHECK(d == doctest::Approx(t.side_length(id)).epsilon(1e-14));
  }
}

TEST_CASE("predicted_neumann_mass") {
  Triangle t = tri345();
  CHECK(predicted_neumann_mass(t, SideId::A) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(predicted_neumann_mass(t, SideId::C) ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-14));

  // Dilation by s scales every prediction by 1/s.
  const double s = 2.75;
  Triangle ts = triangle_from_vertices({0, 0}, {4 * s, 0}, {0, 3 * s});
  for (int k = 0; k < 3; ++k) {
    const SideId id = static_cast<SideId>(k);
    CHECK(predicted_neumann_mass(ts, id) ==
          doctest::Approx(predicted_neumann_mass(t, id) / s).epsilon(1e-13));
  }

  // Sum over sides is perimeter / Area.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    Vec2 p0{u(rng), u(rng)}, p1{u(rng), u(rng)}, p2{u(rng), u(rng)};
    Triangle tt;
    try {
      tt = triangle_from_vertices(p0, p1, p2);
    } catch (const DegenerateTriangle&) {
      continue;
    }
    double sum = 0;
    for (int k = 0; k < 3; ++k) sum += predicted_neumann_mass(tt, static_cast<SideId>(k));
    CHECK(sum == doctest::Approx(tt.perimeter / tt.area).epsilon(1e-12));
  }
}

TEST_CASE("canonicalize equilateral") {
  Triangle t = equilateral2();
  CanonicalFrame f = canonicalize(t, SideId::A);
  CHECK(f.ell == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(f.a1 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(f.a2 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(f.frame_case == FrameCase::acute_or_right);
}

TEST_CASE("canonicalize 3-4-5 with shortest side as A") {
  Triangle t = tri345();
  CanonicalFrame f = canonicalize(t, SideId::A);
  CHECK(f.ell == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(f.frame_case == FrameCase::acute_or_right);
  CHECK(f.a1 * f.a2 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.a1 + f.a2 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("canonicalize obtuse detection matches brute-force projection") {
  Triangle t = triangle_from_vertices({0, 0}, {1, 0}, {-0.4, 0.5});
  CanonicalFrame f = canonicalize(t, SideId::A);
  CHECK(f.frame_case == FrameCase::obtuse);

  // Oracle: project opposite vertex onto the shortest side.
  const Vec2 p = t.vertices[t.opposite_vertex(SideId::A)];
  CHECK(foot_outside_segment(p, t.side_endpoint(SideId::A, 0),
                             t.side_endpoint(SideId::A, 1)));

  CHECK(f.a1 > 0.0);
  CHECK(f.a2 == doctest::Approx(f.a1 + t.side_length(SideId::A)).epsilon(1e-12));
}

TEST_CASE("canonical frame invariants over random triangles") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int tested = 0;
  while (tested < 60) {
    Vec2 p0{u(rng), u(rng)}, p1{u(rng), u(rng)}, p2{u(rng), u(rng)};
    Triangle t;
    try {
      t = triangle_from_vertices(p0, p1, p2);
    } catch (const DegenerateTriangle&) {
      continue;
    }
    if (t.area < 1e-2) continue;
    ++tested;
    for (int s = 0; s < 3; ++s) {
      CanonicalFrame f = canonicalize(t, static_cast<SideId>(s));
      const double a = f.a();
      CHECK(t.area == doctest::Approx(a * f.ell / 2).epsilon(1e-12));
      if (f.frame_case == FrameCase::acute_or_right) {
        CHECK(f.a1 >= 0.0);
        CHECK(f.a2 >= -1e-12);
        CHECK(f.a1 + f.a2 == doctest::Approx(a).epsilon(1e-12));
      } else {
        CHECK(f.a1 > 0.0);
        CHECK(f.a2 == doctest::Approx(a + f.a1).epsilon(1e-12));
      }
      // Isometry reproduces frame coordinates and round-trips.
      for (int i = 0; i < 3; ++i) {
        const Vec2 fc = f.isometry.apply(t.vertices[i]);
        CHECK((fc - f.frame_vertices[i]).norm() <= 1e-12 * (1 + fc.norm()));
        const Vec2 back = f.isometry.inverse().apply(fc);
        CHECK((back - t.vertices[i]).norm() <= 1e-12 * (1 + back.norm()));
      }
      // Frame placement: A at x = ell, opposite corner at origin.
      const int ip = t.opposite_vertex(f.side_for_role[0]);
      CHECK(f.frame_vertices[ip].norm() <= 1e-12);
      for (int i = 0; i < 3; ++i)
        if (i != ip) CHECK(f.frame_vertices[i].x == doctest::Approx(f.ell).epsilon(1e-12));
    }
  }
}

TEST_CASE("rigid motions leave lengths, area, and frame data unchanged") {
  Triangle base = triangle_from_vertices({0.1, -0.2}, {1.7, 0.3}, {0.4, 1.5});
  CanonicalFrame fb = canonicalize(base, SideId::A);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double th = 3.0 * u(rng);
    const double c = std::cos(th), s = std::sin(th);
    const Vec2 shift{2 * u(rng), 2 * u(rng)};
    const bool reflect = trial % 2 == 0;
    auto mv = [&](Vec2 p) {
      if (reflect) p.y = -p.y;
      return Vec2{c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
    };
    Triangle t = triangle_from_vertices(mv(base.vertices[0]), mv(base.vertices[1]),
                                        mv(base.vertices[2]));
    for (int k = 0; k < 3; ++k)
      CHECK(t.side_lengths[k] == doctest::Approx(base.side_lengths[k]).epsilon(1e-12));
    CHECK(t.area == doctest::Approx(base.area).epsilon(1e-12));
    CanonicalFrame f = canonicalize(t, SideId::A);
    CHECK(f.ell == doctest::Approx(fb.ell).epsilon(1e-12));
    CHECK(f.a1 == doctest::Approx(fb.a1).epsilon(1e-11));
    CHECK(f.a2 == doctest::Approx(fb.a2).epsilon(1e-11));
    CHECK(f.frame_case == fb.frame_case);
  }
}

TEST_CASE("side_frames formulas") {
  Triangle t = equilateral2();
  CanonicalFrame f = canonicalize(t, SideId::A);
  auto frames = side_frames(t, f);
  CHECK(frames[0].normal.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(frames[0].normal.y == doctest::Approx(0.0).epsilon(1e-14));
  // nu_C = (-a2/c, ell/c) = (-1/2, sqrt3/2)
  CHECK(frames[2].normal.x == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(frames[2].normal.y == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-13));

  // tau . nu = 0 and unit vectors on every side, any triangle.
  for (const Triangle& tt :
       {tri345(), t, triangle_from_vertices({0, 0}, {1, 0}, {-0.4, 0.5})}) {
    CanonicalFrame ff = canonicalize(tt, SideId::A);
    auto fr = side_frames(tt, ff);
    for (const auto& sf : fr) {
      CHECK(std::abs(sf.tangent.dot(sf.normal)) <= 1e-14);
      CHECK(sf.tangent.norm() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(sf.normal.norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
    // speed * ell = side length on roles B and C
    for (int r : {1, 2})
      CHECK(fr[r].speed * ff.ell / fr[r].length == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("speed on hypotenuse-as-C for 3-4-5") {
  Triangle t = tri345();
  CanonicalFrame f = canonicalize(t, SideId::A);
  auto frames = side_frames(t, f);
  // Role C is the longest remaining side (the hypotenuse, length 5).
  CHECK(frames[2].length == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(frames[2].speed == doctest::Approx(5.0 / f.ell).epsilon(1e-13));
}
