#pragma once

// Full geometric report at one tangent state, and its JSON form.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lhgeom/hamilton.hpp"
#include "lhgeom/kcc.hpp"
#include "lhgeom/lagrange.hpp"
#include "lhgeom/system_file.hpp"
#include "lhgeom/version.hpp"

namespace lhg {

inline constexpr const char* kSignConventionNote =
    "Jacobian entries are the analytic derivatives dX^i/dx^j; for Lotka-Volterra fields the off-diagonal "
    "entries are -a_ij x_i, so explicit off-diagonal entries of N, R_k and N^H carry that sign.";

struct AnalysisReport {
  nlohmann::ordered_json system;
  Vector x, y, p;
  Matrix jacobian;
  Vector semispray;
  Matrix nonlinear_connection;
  std::vector<Matrix> d_torsions;
  double yang_mills_energy = 0.0;
  Matrix hamilton_connection;
  std::vector<Matrix> hamilton_torsions;
  Vector first_invariant;
  Matrix deviation_matrix;
  ComplexSpectrum spectrum;
  JacobiVerdict verdict = JacobiVerdict::marginal;
  std::string tool_version = kVersion;
  std::string sign_convention = kSignConventionNote;
};

/// Evaluates every object at (x, y); y defaults to X(x).
inline AnalysisReport analyze(const SystemDefinition& sys, const Vector& x, const std::optional<Vector>& velocity) {
  const VectorFieldModel& m = sys.model;
  m.check_point(x);
  AnalysisReport r;
  r.system = sys.source;
  r.x = x;
  r.y = velocity ? *velocity : m.evaluate(x);
  m.check_point(r.y);
  const TangentState s{r.x, r.y};
  r.p = legendre_momenta(m, s).p;
  r.jacobian = jacobian(m, x);
  r.semispray = semispray(m, s);
  const LagrangeGeometry lg = lagrange_geometry(m, x);
  r.nonlinear_connection = lg.connection;
  r.d_torsions = lg.torsions;
  r.yang_mills_energy = lg.energy;
  const HamiltonGeometry hg = hamilton_geometry(m, x);
  r.hamilton_connection = hg.connection;
  r.hamilton_torsions = hg.torsions;
  const DeviationReport dev = jacobi_classify(m, s);
  r.first_invariant = dev.first_invariant;
  r.deviation_matrix = dev.p_matrix;
  r.spectrum = dev.spectrum;
  r.verdict = dev.verdict;
  return r;
}

namespace detail {

inline nlohmann::ordered_json matrix_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::vector<double>(m.data().begin(), m.data().end());
  return j;
}

inline nlohmann::ordered_json matrices_json(const std::vector<Matrix>& ms) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& m : ms) j.push_back(matrix_json(m));
  return j;
}

inline void require_exact_keys(const nlohmann::ordered_json& j, const std::vector<std::string>& keys,
                               const std::string& where) {
  if (!j.is_object()) throw ValidationError("report: " + where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) throw ValidationError("report: unknown field '" + k + "' in " + where);
  for (const auto& k : keys)
    if (!j.contains(k)) throw ValidationError("report: missing field '" + k + "' in " + where);
}

inline Vector vector_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw ValidationError("report: expected an array of numbers");
  Vector v;
  for (const auto& e : j) {
    if (!e.is_number()) throw ValidationError("report: expected a number");
    v.push_back(e.get<double>());
  }
  return v;
}

inline Matrix matrix_from_json(const nlohmann::ordered_json& j) {
  require_exact_keys(j, {"rows", "cols", "data"}, "matrix");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const Vector data = vector_from_json(j["data"]);
  if (data.size() != rows * cols) throw ValidationError("report: matrix data does not match its dimensions");
  Matrix m(rows, cols);
  std::copy(data.begin(), data.end(), m.data().begin());
  return m;
}

inline std::vector<Matrix> matrices_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw ValidationError("report: expected an array of matrices");
  std::vector<Matrix> out;
  for (const auto& e : j) out.push_back(matrix_from_json(e));
  return out;
}

inline JacobiVerdict verdict_from_string(const std::string& s) {
  for (auto v : {JacobiVerdict::jacobi_stable, JacobiVerdict::jacobi_unstable, JacobiVerdict::marginal})
    if (to_string(v) == s) return v;
  throw ValidationError("report: unknown verdict '" + s + "'");
}

}  // namespace detail

/// Top-level report fields, in serialization order.
inline const std::vector<std::string>& report_fields() {
  static const std::vector<std::string> fields{
      "tool_version",        "sign_convention",   "system",           "state",
      "jacobian",            "semispray",         "nonlinear_connection", "d_torsions",
      "yang_mills_energy",   "hamilton_connection", "hamilton_torsions", "first_invariant",
      "deviation_matrix",    "spectrum",          "verdict"};
  return fields;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["tool_version"] = r.tool_version;
  j["sign_convention"] = r.sign_convention;
  j["system"] = r.system;
  j["state"] = {{"x", r.x}, {"y", r.y}, {"p", r.p}};
  j["jacobian"] = detail::matrix_json(r.jacobian);
  j["semispray"] = r.semispray;
  j["nonlinear_connection"] = detail::matrix_json(r.nonlinear_connection);
  j["d_torsions"] = detail::matrices_json(r.d_torsions);
  j["yang_mills_energy"] = r.yang_mills_energy;
  j["hamilton_connection"] = detail::matrix_json(r.hamilton_connection);
  j["hamilton_torsions"] = detail::matrices_json(r.hamilton_torsions);
  j["first_invariant"] = r.first_invariant;
  j["deviation_matrix"] = detail::matrix_json(r.deviation_matrix);
  auto spec = nlohmann::ordered_json::array();
  for (const auto& v : r.spectrum) spec.push_back({{"re", v.real()}, {"im", v.imag()}});
  j["spectrum"] = spec;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

/// Strict inverse of to_json: rejects missing and unknown fields.
inline AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  detail::require_exact_keys(j, report_fields(), "report");
  AnalysisReport r;
  r.tool_version = j["tool_version"].get<std::string>();
  r.sign_convention = j["sign_convention"].get<std::string>();
  r.system = j["system"];
  detail::require_exact_keys(j["state"], {"x", "y", "p"}, "state");
  r.x = detail::vector_from_json(j["state"]["x"]);
  r.y = detail::vector_from_json(j["state"]["y"]);
  r.p = detail::vector_from_json(j["state"]["p"]);
  r.jacobian = detail::matrix_from_json(j["jacobian"]);
  r.semispray = detail::vector_from_json(j["semispray"]);
  r.nonlinear_connection = detail::matrix_from_json(j["nonlinear_connection"]);
  r.d_torsions = detail::matrices_from_json(j["d_torsions"]);
  if (!j["yang_mills_energy"].is_number()) throw ValidationError("report: yang_mills_energy must be a number");
  r.yang_mills_energy = j["yang_mills_energy"].get<double>();
  r.hamilton_connection = detail::matrix_from_json(j["hamilton_connection"]);
  r.hamilton_torsions = detail::matrices_from_json(j["hamilton_torsions"]);
  r.first_invariant = detail::vector_from_json(j["first_invariant"]);
  r.deviation_matrix = detail::matrix_from_json(j["deviation_matrix"]);
  std::vector<std::complex<double>> vals;
  if (!j["spectrum"].is_array()) throw ValidationError("report: spectrum must be an array");
  for (const auto& e : j["spectrum"]) {
    detail::require_exact_keys(e, {"re", "im"}, "spectrum entry");
    vals.emplace_back(e["re"].get<double>(), e["im"].get<double>());
  }
  r.spectrum = ComplexSpectrum(std::move(vals));
  r.verdict = detail::verdict_from_string(j["verdict"].get<std::string>());
  return r;
}

}  // namespace lhg
