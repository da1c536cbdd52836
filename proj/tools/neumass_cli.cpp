// neumass: verify boundary-mass identities for Dirichlet eigenfunctions on
// triangles. Subcommands: verify-triangle (FEM pipeline), exact (closed-form
// families), convergence (level sweep, CSV-oriented).
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <omp.h>

#include "neumass/analytic.hpp"
#include "neumass/assembly.hpp"
#include "neumass/eigensolver.hpp"
#include "neumass/errors.hpp"
#include "neumass/trace.hpp"
#include "neumass/verifier.hpp"

using json = nlohmann::ordered_json;
using namespace neumass;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

constexpr unsigned kDefaultSeed = 0x5eed5eedU;
constexpr int kRellichSamples = 25;

void cap_threads_from_env() {
  if (const char* env = std::getenv("RELLICH_TRI_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
  }
}

const char* frame_case_name(FrameCase c) {
  return c == FrameCase::obtuse ? "obtuse" : "acute";
}

json triangle_json(const Triangle& t, FrameCase fc) {
  json j;
  j["vertices"] = json::array();
  for (const Vec2& v : t.vertices) j["vertices"].push_back({v.x, v.y});
  j["sides"] = {{"a", t.side_length(SideId::A)},
                {"b", t.side_length(SideId::B)},
                {"c", t.side_length(SideId::C)}};
  j["area"] = t.area;
  j["frame_case"] = frame_case_name(fc);
  return j;
}

struct EigenReport {
  int index = 0;
  double lambda = 0.0, h = 0.0;
  IdentityReport identity;
  std::vector<RellichPairing> rellich;
  DerivativeResiduals derivative;
};

std::vector<RellichPairing> sample_rellich(const CanonicalFrame& frame,
                                           const std::array<SideMass, 3>& masses,
                                           unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<RellichPairing> out;
  out.reserve(kRellichSamples);
  for (int i = 0; i < kRellichSamples; ++i) {
    const double m = u(rng), n = u(rng);
    out.push_back(rellich_pairing(frame, masses, m, n));
  }
  return out;
}

json eigen_json(const EigenReport& r) {
  json e;
  e["index"] = r.index;
  e["lambda"] = r.lambda;
  e["h"] = r.h;
  e["sides"] = json::array();
  for (const SideReport& sr : r.identity.sides) {
    e["sides"].push_back({{"id", to_string(sr.id)},
                          {"length", sr.length},
                          {"mass", sr.mass},
                          {"predicted", sr.predicted},
                          {"rel_error", sr.rel_residual}});
  }
  e["rellich"] = json::array();
  for (const RellichPairing& p : r.rellich) {
    e["rellich"].push_back({{"m", p.m},
                            {"n", p.n},
                            {"value", p.value},
                            {"deviation_from_2", p.value - RellichPairing::expected}});
  }
  e["derivative_residuals"] = {{"m", r.derivative.residual_m},
                               {"n", r.derivative.residual_n}};
  return e;
}

json report_json(const Triangle& t, const CanonicalFrame& frame,
                 const char* solver, int degree, int refine, TraceMethod trace,
                 const std::vector<EigenReport>& eigs) {
  json j;
  j["triangle"] = triangle_json(t, frame.frame_case);
  j["method"] = {{"solver", solver},
                 {"degree", degree},
                 {"refine", refine},
                 {"trace", to_string(trace)}};
  j["eigenpairs"] = json::array();
  for (const EigenReport& r : eigs) j["eigenpairs"].push_back(eigen_json(r));
  return j;
}

std::string report_csv(int level, const std::vector<EigenReport>& eigs) {
  std::ostringstream os;
  os.precision(17);
  os << "level,eigen_index,side,lambda,h,length,mass,predicted,rel_error,"
        "deriv_residual_m,deriv_residual_n,rellich_max_dev\n";
  for (const EigenReport& r : eigs) {
    double max_dev = 0.0;
    for (const RellichPairing& p : r.rellich)
      max_dev = std::max(max_dev, std::abs(p.value - RellichPairing::expected));
    for (const SideReport& sr : r.identity.sides) {
      os << level << ',' << r.index << ',' << to_string(sr.id) << ','
         << r.lambda << ',' << r.h << ',' << sr.length << ',' << sr.mass << ','
         << sr.predicted << ',' << sr.rel_residual << ','
         << r.derivative.residual_m << ',' << r.derivative.residual_n << ','
         << max_dev << '\n';
    }
  }
  return os.str();
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << text;
  f.flush();
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitIo;
  }
  return 0;
}

int emit_report(const json& j, const std::string& csv, const std::string& format,
                const std::string& out_path) {
  return emit(format == "csv" ? csv : j.dump(2) + "\n", out_path);
}

// Shared FEM campaign: solve, trace, verify. Throws library errors upward.
std::vector<EigenReport> run_fem(const Triangle& t, const CanonicalFrame& frame,
                                 int num_eigs, int level, Degree degree,
                                 TraceMethod trace, unsigned seed) {
  Mesh mesh = refine_mesh(t, level, degree);
  AssembledSystem sys = assemble(mesh);
  auto pairs = solve_lowest_eigenpairs(sys.K, sys.M, num_eigs, 1e-9);

  std::vector<EigenReport> out;
  for (const EigenPair& e : pairs) {
    EigenReport r;
    r.index = e.index;
    r.lambda = e.lambda;
    r.h = e.h;
    std::array<SideMass, 3> masses;
    std::vector<SideMass> mass_list;
    for (int s = 0; s < 3; ++s) {
      const SideId side = static_cast<SideId>(s);
      NeumannTrace tr = trace == TraceMethod::fem_direct
                            ? fem_trace_direct(mesh, e, side)
                            : fem_trace_variational(mesh, sys, e, side);
      masses[s] = side_mass(tr);
      mass_list.push_back(masses[s]);
    }
    ReportMeta meta{e.lambda, e.h, trace, frame.frame_case};
    r.identity = identity_report(t, mass_list, meta);
    r.rellich = sample_rellich(frame, masses, seed + static_cast<unsigned>(e.index));
    r.derivative = master_derivative_checks(frame, masses);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<EigenReport> run_analytic(
    const std::vector<ClosedFormEigenfunction>& modes, const Triangle& t,
    const CanonicalFrame& frame, unsigned seed) {
  std::vector<EigenReport> out;
  int index = 0;
  for (const auto& f : modes) {
    const int order = 12 + 2 * static_cast<int>(std::ceil(std::sqrt(f.lambda) *
                                                          t.side_length(SideId::C)));
    EigenReport r;
    r.index = index;
    r.lambda = f.lambda;
    r.h = f.h;
    std::array<SideMass, 3> masses;
    std::vector<SideMass> mass_list;
    for (int s = 0; s < 3; ++s) {
      masses[s] = side_mass(analytic_trace(f, t, static_cast<SideId>(s), order));
      mass_list.push_back(masses[s]);
    }
    ReportMeta meta{f.lambda, f.h, TraceMethod::analytic, frame.frame_case};
    r.identity = identity_report(t, mass_list, meta);
    r.rellich = sample_rellich(frame, masses, seed + static_cast<unsigned>(index));
    r.derivative = master_derivative_checks(frame, masses);
    out.push_back(std::move(r));
    ++index;
  }
  return out;
}

json square_json(int j_mode, int k_mode, int kmax, bool scaling_demo) {
  json out;
  out["family"] = "square";
  if (scaling_demo) {
    out["scaling_demo"] = json::array();
    for (const ScalingRow& r : square_mass_scaling_demo(kmax)) {
      out["scaling_demo"].push_back({{"j", r.j},
                                     {"k", r.k},
                                     {"h", r.h},
                                     {"mass", r.mass},
                                     {"mass_over_h2", r.mass_over_h2}});
    }
    return out;
  }
  auto f = square_eigenfunction(j_mode, k_mode);
  out["mode"] = {{"j", j_mode}, {"k", k_mode}, {"lambda", f.lambda}, {"h", f.h}};
  out["sides"] = json::array();
  const int order = 7 * std::max(j_mode, k_mode) + 12;
  const char* names[] = {"x0", "x2pi", "y0", "y2pi"};
  for (int s = 0; s < 4; ++s) {
    const SquareSide side = static_cast<SquareSide>(s);
    const double quad = side_mass(analytic_square_trace(f, side, order)).value;
    const double closed = square_neumann_mass(j_mode, k_mode, side);
    out["sides"].push_back({{"id", names[s]},
                            {"mass_quadrature", quad},
                            {"mass_closed_form", closed},
                            {"abs_diff", std::abs(quad - closed)}});
  }
  return out;
}

std::string square_csv(int j_mode, int k_mode, int kmax, bool scaling_demo) {
  std::ostringstream os;
  os.precision(17);
  if (scaling_demo) {
    os << "j,k,h,mass,mass_over_h2\n";
    for (const ScalingRow& r : square_mass_scaling_demo(kmax))
      os << r.j << ',' << r.k << ',' << r.h << ',' << r.mass << ','
         << r.mass_over_h2 << '\n';
    return os.str();
  }
  auto f = square_eigenfunction(j_mode, k_mode);
  os << "j,k,side,mass_quadrature,mass_closed_form,abs_diff\n";
  const int order = 7 * std::max(j_mode, k_mode) + 12;
  const char* names[] = {"x0", "x2pi", "y0", "y2pi"};
  for (int s = 0; s < 4; ++s) {
    const SquareSide side = static_cast<SquareSide>(s);
    const double quad = side_mass(analytic_square_trace(f, side, order)).value;
    const double closed = square_neumann_mass(j_mode, k_mode, side);
    os << j_mode << ',' << k_mode << ',' << names[s] << ',' << quad << ','
       << closed << ',' << std::abs(quad - closed) << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  cap_threads_from_env();

  CLI::App app{"Neumann-mass verification for triangle Dirichlet eigenfunctions"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format/--out/--seed after the subcommand too

  std::string format = "json";
  std::string out_path;
  unsigned seed = kDefaultSeed;
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--seed", seed, "seed for the (m,n) pairing samples");

  // verify-triangle
  auto* verify = app.add_subcommand("verify-triangle", "FEM verification");
  std::vector<double> verts;
  int num_eigs = 6, refine = 6, degree = 2;
  std::string trace_name = "variational";
  double tolerance = 0.02;
  verify->add_option("--vertices", verts, "x0,y0,x1,y1,x2,y2")
      ->required()
      ->delimiter(',')
      ->expected(6);
  verify->add_option("--num-eigs", num_eigs)->check(CLI::Range(1, 64));
  verify->add_option("--refine", refine)->check(CLI::Range(1, 10));
  verify->add_option("--degree", degree)->check(CLI::Range(1, 2));
  verify->add_option("--trace", trace_name)
      ->check(CLI::IsMember({"variational", "direct"}));
  verify->add_option("--tolerance", tolerance, "per-side residual gate");

  // exact
  auto* exact = app.add_subcommand("exact", "closed-form families");
  std::string family = "right-isosceles";
  int j_mode = 1, k_mode = 2, num_modes = 0, kmax = 8;
  double side_len = 1.0;
  bool scaling_demo = false;
  exact->add_option("--family", family)
      ->check(CLI::IsMember({"square", "right-isosceles", "equilateral"}));
  exact->add_option("--j", j_mode);
  exact->add_option("--k", k_mode);
  exact->add_option("--modes", num_modes, "report the N lowest modes");
  exact->add_option("--side-length", side_len, "equilateral side length");
  exact->add_flag("--scaling-demo", scaling_demo, "square mass/h^2 table");
  exact->add_option("--kmax", kmax, "largest k in the scaling demo");

  // convergence
  auto* conv = app.add_subcommand("convergence", "level sweep");
  std::vector<double> cverts = {0, 0, 0, M_PI, M_PI, M_PI};
  int cmin = 3, cmax = 6, cdeg = 2, cnum = 1;
  conv->add_option("--vertices", cverts, "x0,y0,x1,y1,x2,y2")
      ->delimiter(',')
      ->expected(6);
  conv->add_option("--min-level", cmin)->check(CLI::Range(0, 10));
  conv->add_option("--max-level", cmax)->check(CLI::Range(0, 10));
  conv->add_option("--degree", cdeg)->check(CLI::Range(1, 2));
  conv->add_option("--num-eigs", cnum)->check(CLI::Range(1, 16));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      Triangle t = triangle_from_vertices({verts[0], verts[1]},
                                          {verts[2], verts[3]},
                                          {verts[4], verts[5]});
      CanonicalFrame frame = canonicalize(t);
      const TraceMethod trace = trace_name == "direct"
                                    ? TraceMethod::fem_direct
                                    : TraceMethod::fem_variational;
      auto eigs = run_fem(t, frame, num_eigs, refine,
                          degree == 1 ? Degree::p1 : Degree::p2, trace, seed);
      json j = report_json(t, frame, "fem", degree, refine, trace, eigs);
      const int rc = emit_report(j, report_csv(refine, eigs), format, out_path);
      if (rc) return rc;
      for (const EigenReport& r : eigs)
        for (const SideReport& sr : r.identity.sides)
          if (sr.rel_residual > tolerance) return 1;
      return 0;
    }

    if (exact->parsed()) {
      if (family == "square") {
        if (!scaling_demo && (j_mode < 1 || k_mode < 1)) {
          std::cerr << "error: square modes need --j and --k >= 1\n";
          return kExitBadInput;
        }
        return emit_report(square_json(j_mode, k_mode, kmax, scaling_demo),
                           square_csv(j_mode, k_mode, kmax, scaling_demo),
                           format, out_path);
      }
      std::vector<ClosedFormEigenfunction> modes;
      if (family == "right-isosceles") {
        modes = num_modes > 0
                    ? lowest_modes(Family::right_isosceles_pi, num_modes)
                    : std::vector{right_isosceles_eigenfunction(j_mode, k_mode)};
      } else {
        modes = num_modes > 0
                    ? lowest_modes(Family::equilateral, num_modes, side_len)
                    : std::vector{equilateral_eigenfunction(
                          j_mode, k_mode, EquilateralSym::sine, side_len)};
      }
      Triangle t = modes.front().domain_triangle();
      CanonicalFrame frame = canonicalize(t);
      auto eigs = run_analytic(modes, t, frame, seed);
      json j = report_json(t, frame, "analytic", 0, 0, TraceMethod::analytic, eigs);
      return emit_report(j, report_csv(0, eigs), format, out_path);
    }

    // convergence
    if (cmax - cmin + 1 < 3) {
      std::cerr << "error: convergence needs a range of at least 3 levels\n";
      return kExitBadInput;
    }
    Triangle t = triangle_from_vertices({cverts[0], cverts[1]},
                                        {cverts[2], cverts[3]},
                                        {cverts[4], cverts[5]});
    CanonicalFrame frame = canonicalize(t);
    std::ostringstream csv;
    csv.precision(17);
    csv << "level,eigen_index,side,lambda,h,length,mass,predicted,rel_error,"
           "deriv_residual_m,deriv_residual_n,rellich_max_dev\n";
    json levels = json::array();
    std::vector<std::array<double, 3>> prev_res;
    for (int level = cmin; level <= cmax; ++level) {
      auto eigs = run_fem(t, frame, cnum, level,
                          cdeg == 1 ? Degree::p1 : Degree::p2,
                          TraceMethod::fem_variational, seed);
      std::string rows = report_csv(level, eigs);
      csv << rows.substr(rows.find('\n') + 1);  // drop the repeated header
      json lj;
      lj["level"] = level;
      lj["eigenpairs"] = json::array();
      for (const EigenReport& r : eigs) lj["eigenpairs"].push_back(eigen_json(r));
      // observed order against the previous level, per eigen index and side
      if (!prev_res.empty()) {
        json orders = json::array();
        for (std::size_t i = 0; i < eigs.size(); ++i) {
          json per_side = json::array();
          for (int s = 0; s < 3; ++s) {
            const double now = eigs[i].identity.sides[s].rel_residual;
            const double before = prev_res[i][s];
            per_side.push_back(now > 0 ? std::log2(before / now) : 0.0);
          }
          orders.push_back(per_side);
        }
        lj["observed_orders"] = orders;
      }
      prev_res.clear();
      for (const EigenReport& r : eigs)
        prev_res.push_back({r.identity.sides[0].rel_residual,
                            r.identity.sides[1].rel_residual,
                            r.identity.sides[2].rel_residual});
      levels.push_back(lj);
    }
    json j;
    j["triangle"] = triangle_json(t, frame.frame_case);
    j["method"] = {{"solver", "fem"},
                   {"degree", cdeg},
                   {"refine", {cmin, cmax}},
                   {"trace", to_string(TraceMethod::fem_variational)}};
    j["levels"] = levels;
    return emit_report(j, csv.str(), format, out_path);
  } catch (const DegenerateTriangle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NonFiniteInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidMode& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const RefinementTooDeep& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
