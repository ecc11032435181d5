// lhgeom: command-line front end for the Lagrange-Hamilton geometry library.
//
// Exit codes: 0 success, 1 input or validation error, 2 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lhgeom/lhgeom.hpp"

namespace {

using lhg::Vector;

Vector parse_vector(const std::string& text, const std::string& what) {
  Vector out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k)
    if (k == text.size() || text[k] == ',') {
      out.push_back(lhg::detail::parse_real(std::string_view(text).substr(start, k - start), what));
      start = k + 1;
    }
  return out;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw lhg::ValidationError("cannot open output file '" + out_path + "'");
  f << content;
  if (!f) throw lhg::ValidationError("failed writing output file '" + out_path + "'");
}

struct Options {
  std::string system;
  std::string out;
  // analyze
  std::string point;
  std::string velocity;
  // integrate
  std::string x0;
  std::string y0 = "X";
  double h = 0.01;
  long long steps = 1000;
  std::string mode = "flow";
  bool residual = false;
  // surface
  double rho = 1.0;
  std::size_t resolution = 32;
  std::string format = "obj";
  double length = 10.0;
  // sweep
  std::string param, range, param2, range2;
  unsigned jobs = 0;
};

std::string run_analyze(const Options& o) {
  const auto sys = lhg::load_system(o.system);
  const Vector x = parse_vector(o.point, "--point");
  std::optional<Vector> y;
  if (!o.velocity.empty() && o.velocity != "X") y = parse_vector(o.velocity, "--velocity");
  const auto report = lhg::analyze(sys, x, y);
  return lhg::to_json(report).dump(2) + "\n";
}

std::string run_stability(const Options& o) {
  const auto sys = lhg::load_system(o.system);
  if (!sys.model.is_lotka_volterra()) throw lhg::ValidationError("stability requires a Lotka-Volterra system");
  return lhg::stability_csv(lhg::equilibria(sys.model), sys.model.dimension());
}

std::string run_integrate(const Options& o) {
  const auto sys = lhg::load_system(o.system);
  const auto& m = sys.model;
  const Vector x0 = parse_vector(o.x0, "--x0");
  m.check_point(x0);
  if (o.mode == "flow") {
    const auto traj = lhg::integrate_flow(m, x0, o.h, o.steps);
    if (!o.residual) return lhg::trajectory_csv(traj);
    if (traj.samples.size() < 3) throw lhg::ValidationError("--residual needs at least 3 samples");
    const auto profile = lhg::el_residual_profile(m, traj);
    return lhg::trajectory_csv(traj, &profile);
  }
  if (o.mode == "el") {
    if (o.residual) throw lhg::ValidationError("--residual applies to flow mode only");
    const Vector y0 = o.y0 == "X" ? m.evaluate(x0) : parse_vector(o.y0, "--y0");
    return lhg::trajectory_csv(lhg::integrate_euler_lagrange(m, x0, y0, o.h, o.steps));
  }
  throw lhg::ValidationError("--mode must be flow or el");
}

std::string run_surface(const Options& o) {
  const auto sys = lhg::load_system(o.system);
  if (o.format != "obj" && o.format != "csv") throw lhg::ValidationError("--format must be obj or csv");
  const auto q = lhg::energy_quadratic_form(sys.model);
  std::cerr << "classification: " << lhg::to_string(q.classification) << "\n";
  const auto mesh = lhg::sample_surface(q, o.rho, o.resolution, o.length);
  return o.format == "obj" ? lhg::mesh_obj(mesh) : lhg::mesh_points_csv(mesh);
}

std::string run_sweep(const Options& o) {
  const auto sys = lhg::load_system(o.system);
  const auto* lv = sys.model.lotka_volterra_params();
  if (lv == nullptr) throw lhg::ValidationError("sweep requires a Lotka-Volterra system");
  const std::size_t n = sys.model.dimension();
  std::vector<lhg::SweepAxis> axes;
  axes.push_back({lhg::parse_param_path(o.param, n), lhg::parse_range(o.range)});
  if (o.param2.empty() != o.range2.empty()) throw lhg::ValidationError("--param2 and --range2 go together");
  if (!o.param2.empty()) axes.push_back({lhg::parse_param_path(o.param2, n), lhg::parse_range(o.range2)});
  const unsigned jobs = o.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.jobs;
  const auto cells = lhg::run_sweep(*lv, axes, jobs);
  return lhg::sweep_csv(axes, cells, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrange-Hamilton geometry and Jacobi stability of polynomial dynamical systems"};
  app.set_version_flag("--version", std::string(lhg::kVersion));
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Evaluate every geometric object at one state (JSON report)");
  analyze->add_option("system", o.system, "System definition file")->required();
  analyze->add_option("--point", o.point, "Position x, comma separated")->required();
  analyze->add_option("--velocity", o.velocity, "Velocity y, comma separated, or X for y = X(x) (default)");
  analyze->add_option("--out", o.out, "Output file (default stdout)");

  auto* stability = app.add_subcommand("stability", "Equilibria with Lyapunov and Jacobi verdicts (CSV)");
  stability->add_option("system", o.system, "System definition file")->required();
  stability->add_option("--out", o.out, "Output file (default stdout)");

  auto* integrate = app.add_subcommand("integrate", "Fixed-step RK4 trajectory (CSV)");
  integrate->set_help_flag("--help", "Print this help message and exit");  // frees --h for the step
  integrate->add_option("system", o.system, "System definition file")->required();
  integrate->add_option("--x0", o.x0, "Initial position, comma separated")->required();
  integrate->add_option("--h", o.h, "Time step")->capture_default_str();
  integrate->add_option("--steps", o.steps, "Number of steps")->capture_default_str();
  integrate->add_option("--mode", o.mode, "flow (x' = X) or el (x'' + 2G = 0)")->capture_default_str();
  integrate->add_option("--y0", o.y0, "Initial velocity for el mode, or X for y0 = X(x0)")->capture_default_str();
  integrate->add_flag("--residual", o.residual, "Append the Euler-Lagrange residual column (flow mode)");
  integrate->add_option("--out", o.out, "Output file (default stdout)");

  auto* surface = app.add_subcommand("surface", "Sample a constant-energy quadric (OBJ or CSV)");
  surface->add_option("system", o.system, "System definition file")->required();
  surface->add_option("--rho", o.rho, "Energy level")->capture_default_str();
  surface->add_option("--resolution", o.resolution, "Grid resolution (>= 8)")->capture_default_str();
  surface->add_option("--format", o.format, "obj or csv")->capture_default_str();
  surface->add_option("--length", o.length, "Cylinder half-length")->capture_default_str();
  surface->add_option("--out", o.out, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Interior-equilibrium stability over a parameter grid (CSV)");
  sweep->add_option("system", o.system, "System definition file")->required();
  sweep->add_option("--param", o.param, "Coefficient path, a.i.j or b.i")->required();
  sweep->add_option("--range", o.range, "lo:hi:step")->required();
  sweep->add_option("--param2", o.param2, "Second coefficient path");
  sweep->add_option("--range2", o.range2, "Second range");
  sweep->add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  sweep->add_option("--out", o.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::string content;
    if (*analyze) content = run_analyze(o);
    else if (*stability) content = run_stability(o);
    else if (*integrate) content = run_integrate(o);
    else if (*surface) content = run_surface(o);
    else if (*sweep) content = run_sweep(o);
    emit(content, o.out);
  } catch (const lhg::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lhg::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
