#pragma once

// Text exports: trajectory and stability CSV, surface OBJ and point CSV.
// Floats use the shortest round-trip decimal form; lines end with "\n".

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lhgeom/dynamics.hpp"
#include "lhgeom/format.hpp"
#include "lhgeom/quadric.hpp"

namespace lhg {

inline std::string support_label(const std::vector<std::size_t>& support) {
  std::string s = "{";
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k) s += ';';
    s += std::to_string(support[k] + 1);
  }
  return s + "}";
}

/// Header t,x1..xn[,y1..yn][,residual]; residual cells are empty at the ends.
inline std::string trajectory_csv(const Trajectory& traj,
                                  const std::vector<std::optional<double>>* residual = nullptr) {
  std::string out = "t";
  for (std::size_t i = 1; i <= traj.dimension; ++i) out += ",x" + std::to_string(i);
  if (traj.has_velocity)
    for (std::size_t i = 1; i <= traj.dimension; ++i) out += ",y" + std::to_string(i);
  if (residual) out += ",residual";
  out += '\n';
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& s = traj.samples[k];
    out += format_double(s.t);
    for (double v : s.x) out += ',' + format_double(v);
    if (traj.has_velocity)
      for (double v : s.y) out += ',' + format_double(v);
    if (residual) {
      out += ',';
      if (k < residual->size() && (*residual)[k]) out += format_double(*(*residual)[k]);
    }
    out += '\n';
  }
  if (traj.truncated) out += "# truncated at t=" + format_double(traj.truncated_at) + '\n';
  return out;
}

/// One row per equilibrium, then one "# singular support" line per skipped support.
inline std::string stability_csv(const EquilibriumSet& set, std::size_t n) {
  std::string out = "support";
  for (std::size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
  out += ",lyapunov,max_re_jacobian,jacobi,max_re_deviation\n";
  for (const auto& e : set.equilibria) {
    out += support_label(e.support);
    for (double v : e.x) out += ',' + format_double(v);
    out += ',' + std::string(to_string(e.lyapunov));
    out += ',' + format_double(e.jacobian_spectrum.max_real());
    out += ',' + std::string(to_string(e.jacobi));
    out += ',' + format_double(e.deviation_spectrum.max_real()) + '\n';
  }
  for (const auto& s : set.singular_supports) out += "# singular support " + support_label(s) + " skipped\n";
  return out;
}

/// "v x y z" records then "f i j k l" quads with 1-based indices.
inline std::string mesh_obj(const SurfaceMesh& mesh) {
  std::string out;
  for (const auto& v : mesh.vertices)
    out += "v " + format_double(v[0]) + ' ' + format_double(v[1]) + ' ' + format_double(v[2]) + '\n';
  for (const auto& f : mesh.quads)
    out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + ' ' +
           std::to_string(f[3] + 1) + '\n';
  return out;
}

inline std::string mesh_points_csv(const SurfaceMesh& mesh) {
  std::string out = "x1,x2,x3\n";
  for (const auto& v : mesh.vertices)
    out += format_double(v[0]) + ',' + format_double(v[1]) + ',' + format_double(v[2]) + '\n';
  return out;
}

}  // namespace lhg
