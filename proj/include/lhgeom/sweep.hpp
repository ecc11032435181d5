#pragma once

// Parameter sweeps over Lotka-Volterra coefficients: each grid cell re-solves
// the interior equilibrium and classifies it. Cells are independent and may
// be evaluated by several workers; results are always ordered by grid index.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <exception>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "lhgeom/dynamics.hpp"
#include "lhgeom/error.hpp"
#include "lhgeom/format.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

/// Address of one coefficient: a.i.j or b.i (1-based in text, 0-based here).
struct ParamRef {
  bool matrix = true;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string text;
};

namespace detail {

inline std::size_t parse_index(std::string_view s, std::size_t n, std::string_view path) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 1 || v > n)
    throw ValidationError("parameter path '" + std::string(path) + "': index out of range");
  return v - 1;
}

inline double parse_real(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw ValidationError(std::string(what) + ": '" + std::string(s) + "' is not a finite number");
  return v;
}

}  // namespace detail

inline ParamRef parse_param_path(std::string_view path, std::size_t n) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= path.size(); ++k)
    if (k == path.size() || path[k] == '.') {
      parts.push_back(path.substr(start, k - start));
      start = k + 1;
    }
  ParamRef ref;
  ref.text = std::string(path);
  if (parts.size() == 3 && parts[0] == "a") {
    ref.matrix = true;
    ref.i = detail::parse_index(parts[1], n, path);
    ref.j = detail::parse_index(parts[2], n, path);
  } else if (parts.size() == 2 && parts[0] == "b") {
    ref.matrix = false;
    ref.i = detail::parse_index(parts[1], n, path);
  } else {
    throw ValidationError("parameter path '" + std::string(path) + "' must look like a.i.j or b.i");
  }
  return ref;
}

/// "lo:hi:step" -> lo, lo+step, ... up to hi. A step larger than hi-lo
/// yields only lo.
inline std::vector<double> parse_range(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos)
    throw ValidationError("range '" + std::string(text) + "' must look like lo:hi:step");
  const double lo = detail::parse_real(text.substr(0, c1), "range");
  const double hi = detail::parse_real(text.substr(c1 + 1, c2 - c1 - 1), "range");
  const double step = detail::parse_real(text.substr(c2 + 1), "range");
  if (!(step > 0.0)) throw ValidationError("range step must be positive");
  if (hi < lo) throw ValidationError("range upper bound is below the lower bound");
  const double count = std::floor((hi - lo) / step + 1e-9);
  if (count > 1e6) throw ValidationError("range has too many points");
  std::vector<double> values;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(count); ++k) values.push_back(lo + static_cast<double>(k) * step);
  return values;
}

struct SweepAxis {
  ParamRef param;
  std::vector<double> values;
};

struct SweepCell {
  std::vector<double> params;
  bool degenerate = false;
  bool interior_exists = false;
  Vector x;
  LyapunovVerdict lyapunov = LyapunovVerdict::marginal;
  JacobiVerdict jacobi = JacobiVerdict::marginal;
};

inline void apply_param(LotkaVolterraParams& p, const ParamRef& ref, double v) {
  if (ref.matrix) p.a(ref.i, ref.j) = v;
  else p.b[ref.i] = v;
}

inline SweepCell evaluate_cell(LotkaVolterraParams p, const std::vector<SweepAxis>& axes,
                               const std::vector<double>& values) {
  SweepCell cell;
  cell.params = values;
  for (std::size_t k = 0; k < axes.size(); ++k) apply_param(p, axes[k].param, values[k]);
  const VectorFieldModel m = lotka_volterra(p.a, p.b);
  Vector x;
  try {
    x = solve_linear(p.a, p.b);
  } catch (const SingularMatrixError&) {
    cell.degenerate = true;
    return cell;
  }
  cell.interior_exists = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; });
  const Equilibrium e = classify_equilibrium(m, x, {});
  cell.x = std::move(x);
  cell.lyapunov = e.lyapunov;
  cell.jacobi = e.jacobi;
  return cell;
}

/// Evaluates the Cartesian grid of the axes (first axis slowest) with up to
/// `jobs` workers.
inline std::vector<SweepCell> run_sweep(const LotkaVolterraParams& base, const std::vector<SweepAxis>& axes,
                                        unsigned jobs) {
  if (axes.empty() || axes.size() > 2) throw ValidationError("sweep takes one or two parameters");
  for (const auto& ax : axes)
    for (double v : ax.values)
      if (!(v > 0.0))
        throw ValidationError("sweep value " + format_double(v) + " for " + ax.param.text +
                              " violates strict positivity");
  std::size_t total = 1;
  for (const auto& ax : axes) total *= ax.values.size();
  std::vector<std::vector<double>> grid(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::vector<double> v(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      v[k] = axes[k].values[rem % axes[k].values.size()];
      rem /= axes[k].values.size();
    }
    grid[idx] = std::move(v);
  }

  std::vector<SweepCell> cells(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      try {
        cells[idx] = evaluate_cell(base, axes, grid[idx]);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  const unsigned nworkers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return cells;
}

inline std::string sweep_csv(const std::vector<SweepAxis>& axes, const std::vector<SweepCell>& cells, std::size_t n) {
  std::string out;
  for (const auto& ax : axes) out += ax.param.text + ',';
  out += "interior_exists";
  for (std::size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
  out += ",lyapunov,jacobi\n";
  for (const auto& c : cells) {
    for (double v : c.params) out += format_double(v) + ',';
    if (c.degenerate) {
      out += "false";
      for (std::size_t i = 0; i < n; ++i) out += ',';
      out += ",degenerate,degenerate\n";
      continue;
    }
    out += c.interior_exists ? "true" : "false";
    for (double v : c.x) out += ',' + format_double(v);
    out += ',' + std::string(to_string(c.lyapunov)) + ',' + std::string(to_string(c.jacobi)) + '\n';
  }
  return out;
}

}  // namespace lhg
