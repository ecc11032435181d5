#pragma once

// System definition files (JSON):
//   {"type": "lotka_volterra", "a": [[...], ...], "b": [...]}
//   {"type": "custom", "dimension": n, "components": ["expr1", ...]}

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lhgeom/error.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

struct SystemDefinition {
  nlohmann::ordered_json source;  ///< the definition as loaded, for echoing
  VectorFieldModel model;
};

namespace detail {

inline void require_keys(const nlohmann::ordered_json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key)) throw ValidationError("system file: unknown field '" + key + "'");
  for (const auto& k : allowed)
    if (!j.contains(k)) throw ValidationError("system file: missing field '" + k + "'");
}

inline double require_number(const nlohmann::ordered_json& j, const std::string& what) {
  if (!j.is_number()) throw ValidationError("system file: " + what + " must be a number");
  return j.get<double>();
}

}  // namespace detail

inline SystemDefinition system_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ValidationError("system file: top level must be an object");
  if (!j.contains("type") || !j["type"].is_string()) throw ValidationError("system file: missing string field 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "lotka_volterra") {
    detail::require_keys(j, {"type", "a", "b"});
    const auto& ja = j["a"];
    const auto& jb = j["b"];
    if (!jb.is_array() || jb.empty()) throw ValidationError("system file: 'b' must be a nonempty array");
    if (!ja.is_array()) throw ValidationError("system file: 'a' must be an array of rows");
    const std::size_t n = jb.size();
    if (ja.size() != n) throw ValidationError("system file: 'a' must have as many rows as 'b' has entries");
    Matrix a(n, n);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = detail::require_number(jb[i], "b entry");
      if (!ja[i].is_array() || ja[i].size() != n)
        throw ValidationError("system file: row " + std::to_string(i + 1) + " of 'a' must have " +
                              std::to_string(n) + " entries");
      for (std::size_t k = 0; k < n; ++k) a(i, k) = detail::require_number(ja[i][k], "a entry");
    }
    return {j, lotka_volterra(std::move(a), std::move(b))};
  }
  if (type == "custom") {
    detail::require_keys(j, {"type", "dimension", "components"});
    if (!j["dimension"].is_number_integer() || j["dimension"].get<long long>() < 2)
      throw ValidationError("system file: 'dimension' must be an integer >= 2");
    const auto n = static_cast<std::size_t>(j["dimension"].get<long long>());
    const auto& jc = j["components"];
    if (!jc.is_array() || jc.size() != n)
      throw ValidationError("system file: 'components' must list exactly 'dimension' expressions");
    std::vector<std::string> sources;
    for (const auto& c : jc) {
      if (!c.is_string()) throw ValidationError("system file: components must be strings");
      sources.push_back(c.get<std::string>());
    }
    return {j, custom_field(sources)};
  }
  throw ValidationError("system file: unknown type '" + type + "'");
}

inline SystemDefinition parse_system(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("system file: ") + e.what());
  }
  return system_from_json(j);
}

inline SystemDefinition load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open system file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

/// JSON definition of a Lotka-Volterra system.
inline nlohmann::ordered_json lotka_volterra_json(const LotkaVolterraParams& p) {
  nlohmann::ordered_json j;
  j["type"] = "lotka_volterra";
  j["a"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.a.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < p.a.cols(); ++k) row.push_back(p.a(i, k));
    j["a"].push_back(row);
  }
  j["b"] = p.b;
  return j;
}

}  // namespace lhg
