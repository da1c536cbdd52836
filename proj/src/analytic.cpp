#include "neumass/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <tuple>

#include "neumass/errors.hpp"
#include "neumass/quadrature.hpp"

namespace neumass {

namespace {
constexpr double kPi = M_PI;
constexpr double kTwoPi = 2.0 * M_PI;
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::square_2pi: return "square";
    case Family::right_isosceles_pi: return "right-isosceles";
    case Family::equilateral: return "equilateral";
  }
  return "?";
}

const char* to_string(SquareSide s) {
  switch (s) {
    case SquareSide::x0: return "x0";
    case SquareSide::x2pi: return "x2pi";
    case SquareSide::y0: return "y0";
    case SquareSide::y2pi: return "y2pi";
  }
  return "?";
}

double ClosedFormEigenfunction::value(Vec2 p) const {
  switch (family) {
    case Family::square_2pi:
      return normalization * std::sin(m * p.x) * std::sin(n * p.y);
    case Family::right_isosceles_pi:
      return normalization * (std::sin(m * p.x) * std::sin(n * p.y) -
                              std::sin(n * p.x) * std::sin(m * p.y));
    case Family::equilateral: {
      std::complex<double> s(0.0, 0.0);
      for (const Wave& w : waves_)
        s += w.sign * std::exp(std::complex<double>(0.0, w.kx * p.x + w.ky * p.y));
      return normalization * (sym == EquilateralSym::sine ? s.imag() : s.real());
    }
  }
  return 0.0;
}

Vec2 ClosedFormEigenfunction::gradient(Vec2 p) const {
  switch (family) {
    case Family::square_2pi:
      return {normalization * m * std::cos(m * p.x) * std::sin(n * p.y),
              normalization * n * std::sin(m * p.x) * std::cos(n * p.y)};
    case Family::right_isosceles_pi:
      return {normalization * (m * std::cos(m * p.x) * std::sin(n * p.y) -
                               n * std::cos(n * p.x) * std::sin(m * p.y)),
              normalization * (n * std::sin(m * p.x) * std::cos(n * p.y) -
                               m * std::sin(n * p.x) * std::cos(m * p.y))};
    case Family::equilateral: {
      std::complex<double> gx(0.0, 0.0), gy(0.0, 0.0);
      for (const Wave& w : waves_) {
        std::complex<double> e =
            w.sign * std::exp(std::complex<double>(0.0, w.kx * p.x + w.ky * p.y));
        gx += std::complex<double>(0.0, w.kx) * e;
        gy += std::complex<double>(0.0, w.ky) * e;
      }
      if (sym == EquilateralSym::sine)
        return {normalization * gx.imag(), normalization * gy.imag()};
      return {normalization * gx.real(), normalization * gy.real()};
    }
  }
  return {0.0, 0.0};
}

bool ClosedFormEigenfunction::contains(Vec2 p, double tol) const {
  if (family == Family::square_2pi) {
    double t = tol * kTwoPi;
    return p.x >= -t && p.x <= kTwoPi + t && p.y >= -t && p.y <= kTwoPi + t;
  }
  Triangle t = domain_triangle();
  double scale = std::max({t.side_lengths[0], t.side_lengths[1], t.side_lengths[2]});
  double eps = tol * scale;
  const auto& v = t.vertices;
  double twice_area = 2.0 * t.area;
  for (int k = 0; k < 3; ++k) {
    // Signed distance-ish barycentric test against edge k.
    double s = (v[(k + 1) % 3] - v[k]).cross(p - v[k]) / twice_area;
    if (s < -eps / scale) return false;
  }
  return true;
}

Triangle ClosedFormEigenfunction::domain_triangle() const {
  switch (family) {
    case Family::right_isosceles_pi:
      return triangle_from_vertices({0, 0}, {0, kPi}, {kPi, kPi});
    case Family::equilateral:
      return triangle_from_vertices({0, 0}, {side, 0},
                                    {0.5 * side, 0.5 * kSqrt3 * side});
    case Family::square_2pi:
      throw GeometryMismatch("square family has no triangular domain");
  }
  throw GeometryMismatch("unknown family");
}

void ClosedFormEigenfunction::evaluate(std::span<const Vec2> points,
                                       std::vector<double>& values,
                                       std::vector<Vec2>& gradients) const {
  values.resize(points.size());
  gradients.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!contains(points[i]))
      throw OutOfDomain("evaluate: point outside domain closure");
    values[i] = value(points[i]);
    gradients[i] = gradient(points[i]);
  }
}

ClosedFormEigenfunction square_eigenfunction(int j, int k) {
  if (j < 1 || k < 1) throw InvalidMode("square_eigenfunction: j,k must be >= 1");
  ClosedFormEigenfunction f;
  f.family = Family::square_2pi;
  f.m = j;
  f.n = k;
  f.lambda = static_cast<double>(j) * j + static_cast<double>(k) * k;
  f.h = 1.0 / std::sqrt(f.lambda);
  f.normalization = 1.0 / kPi;
  return f;
}

double square_neumann_mass(int j, int k, SquareSide side) {
  if (j < 1 || k < 1) throw InvalidMode("square_neumann_mass: j,k must be >= 1");
  const double h2 = 1.0 / (static_cast<double>(j) * j + static_cast<double>(k) * k);
  const bool xside = (side == SquareSide::x0 || side == SquareSide::x2pi);
  const double q = xside ? static_cast<double>(j) * j : static_cast<double>(k) * k;
  return h2 * q / kPi;
}

std::vector<ScalingRow> square_mass_scaling_demo(int k_max) {
  if (k_max < 2) throw InvalidMode("square_mass_scaling_demo: k_max must be >= 2");
  std::vector<ScalingRow> rows;
  rows.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    ScalingRow r;
    r.j = 1;
    r.k = k;
    r.h = 1.0 / std::sqrt(1.0 + static_cast<double>(k) * k);
    r.mass = square_neumann_mass(1, k, SquareSide::x0);
    r.mass_over_h2 = r.mass / (r.h * r.h);
    rows.push_back(r);
  }
  return rows;
}

ClosedFormEigenfunction right_isosceles_eigenfunction(int j, int k) {
  if (j < 1 || j >= k)
    throw InvalidMode("right_isosceles_eigenfunction: need 1 <= j < k");
  ClosedFormEigenfunction f;
  f.family = Family::right_isosceles_pi;
  f.m = j;
  f.n = k;
  f.lambda = static_cast<double>(j) * j + static_cast<double>(k) * k;
  f.h = 1.0 / std::sqrt(f.lambda);
  // Integral of (sin jx sin ky - sin kx sin jy)^2 over the triangle is pi^2/4.
  f.normalization = 2.0 / kPi;
  return f;
}

namespace {

// Unit-side normalization constants for the equilateral family, computed
// once by mapped tensor Gauss quadrature.
double equilateral_unit_norm(const ClosedFormEigenfunction& unit_mode) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, int>, double> cache;
  std::tuple<int, int, int> key{unit_mode.m, unit_mode.n,
                                static_cast<int>(unit_mode.sym)};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const QuadRule2D q = triangle_gauss(40);
  const Vec2 v0{0, 0}, v1{1, 0}, v2{0.5, 0.5 * kSqrt3};
  double integral = 0.0;
  for (std::size_t i = 0; i < q.w.size(); ++i) {
    Vec2 p = v0 + q.x[i] * (v1 - v0) + q.y[i] * (v2 - v0);
    double u = unit_mode.value(p);
    integral += q.w[i] * u * u;
  }
  integral *= kSqrt3 / 2.0;  // affine Jacobian, reference to physical
  if (integral <= 0.0)
    throw InvalidMode("equilateral_eigenfunction: mode vanishes identically");
  double norm = 1.0 / std::sqrt(integral);
  std::lock_guard<std::mutex> lock(mtx);
  cache[key] = norm;
  return norm;
}

}  // namespace

ClosedFormEigenfunction equilateral_eigenfunction(int m, int n,
                                                 EquilateralSym sym, double L) {
  if (m < 1 || n < 1)
    throw InvalidMode("equilateral_eigenfunction: m,n must be >= 1");
  if (sym == EquilateralSym::cosine && m == n)
    throw InvalidMode("equilateral_eigenfunction: cosine class empty for m == n");
  if (!(L > 0.0)) throw InvalidMode("equilateral_eigenfunction: L must be > 0");

  ClosedFormEigenfunction f;
  f.family = Family::equilateral;
  f.m = m;
  f.n = n;
  f.sym = sym;
  f.side = L;
  const double q2 = static_cast<double>(m) * m + static_cast<double>(m) * n +
                    static_cast<double>(n) * n;
  f.lambda = 16.0 * kPi * kPi / (9.0 * L * L) * q2;
  f.h = 1.0 / std::sqrt(f.lambda);

  // Dual-lattice vector of the unfolded reflection tiling (unit side),
  // antisymmetrized over the order-6 point group.
  const double gx = (2.0 * (m + n) - n) / 3.0;
  const double gy = n / kSqrt3;
  f.waves_.reserve(6);
  auto add = [&](double c, double s, double sign) {
    // Group element with rows (c, -s; s, c) applied to g, times 2*pi/L.
    f.waves_.push_back({kTwoPi / L * (c * gx - s * gy),
                        kTwoPi / L * (s * gx + c * gy), sign});
  };
  for (int k = 0; k < 3; ++k) {
    double th = kTwoPi * k / 3.0;
    add(std::cos(th), std::sin(th), 1.0);
  }
  for (double ang : {0.0, kPi / 3.0, 2.0 * kPi / 3.0}) {
    // Reflection across the line at angle ang: (cos2a, sin2a; sin2a, -cos2a).
    double c = std::cos(2.0 * ang), s = std::sin(2.0 * ang);
    f.waves_.push_back({kTwoPi / L * (c * gx + s * gy),
                        kTwoPi / L * (s * gx - c * gy), -1.0});
  }

  ClosedFormEigenfunction unit = f;
  if (L != 1.0) {
    unit.side = 1.0;
    for (auto& w : unit.waves_) {
      w.kx *= L;
      w.ky *= L;
    }
  }
  unit.normalization = 1.0;
  f.normalization = equilateral_unit_norm(unit) / L;
  return f;
}

std::vector<ClosedFormEigenfunction> lowest_modes(Family fam, int count,
                                                  double L) {
  struct Cand {
    double lambda;
    int m, n;
  };
  std::vector<Cand> cands;
  const int kmax = 4 + static_cast<int>(std::ceil(std::sqrt(2.0 * count + 25.0)));
  switch (fam) {
    case Family::square_2pi:
      for (int j = 1; j <= kmax; ++j)
        for (int k = 1; k <= kmax; ++k)
          cands.push_back({static_cast<double>(j * j + k * k), j, k});
      break;
    case Family::right_isosceles_pi:
      for (int j = 1; j <= kmax; ++j)
        for (int k = j + 1; k <= kmax; ++k)
          cands.push_back({static_cast<double>(j * j + k * k), j, k});
      break;
    case Family::equilateral:
      for (int m = 1; m <= kmax; ++m)
        for (int n = m; n <= kmax; ++n)
          cands.push_back({static_cast<double>(m * m + m * n + n * n), m, n});
      break;
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.lambda, a.m, a.n) < std::tie(b.lambda, b.m, b.n);
  });
  std::vector<ClosedFormEigenfunction> out;
  out.reserve(count);
  for (int i = 0; i < count && i < static_cast<int>(cands.size()); ++i) {
    const Cand& c = cands[i];
    switch (fam) {
      case Family::square_2pi:
        out.push_back(square_eigenfunction(c.m, c.n));
        break;
      case Family::right_isosceles_pi:
        out.push_back(right_isosceles_eigenfunction(c.m, c.n));
        break;
      case Family::equilateral:
        out.push_back(equilateral_eigenfunction(c.m, c.n, EquilateralSym::sine, L));
        break;
    }
  }
  return out;
}

}  // namespace neumass
