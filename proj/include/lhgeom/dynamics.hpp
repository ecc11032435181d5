#pragma once

// Equilibria of Lotka-Volterra fields and fixed-step RK4 integration of the
// first-order flow x' = X(x) and of the Euler-Lagrange system x'' + 2G = 0.

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lhgeom/error.hpp"
#include "lhgeom/kcc.hpp"
#include "lhgeom/lagrange.hpp"
#include "lhgeom/linalg.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

enum class LyapunovVerdict { stable, unstable, marginal };

inline std::string_view to_string(LyapunovVerdict v) {
  switch (v) {
    case LyapunovVerdict::stable: return "stable";
    case LyapunovVerdict::unstable: return "unstable";
    case LyapunovVerdict::marginal: return "marginal";
  }
  return "marginal";
}

/// Linear stability from the Jacobian spectrum; |Re| <= 1e-9 ||J|| is marginal.
inline LyapunovVerdict lyapunov_verdict(const ComplexSpectrum& spectrum, const Matrix& j) {
  switch (classify_real_parts(spectrum, 1e-9 * j.norm_inf())) {
    case SpectralSign::negative: return LyapunovVerdict::stable;
    case SpectralSign::positive: return LyapunovVerdict::unstable;
    case SpectralSign::marginal: return LyapunovVerdict::marginal;
  }
  return LyapunovVerdict::marginal;
}

struct Equilibrium {
  Vector x;
  std::vector<std::size_t> support;  ///< 0-based indices of positive coordinates
  ComplexSpectrum jacobian_spectrum;
  LyapunovVerdict lyapunov = LyapunovVerdict::marginal;
  ComplexSpectrum deviation_spectrum;
  JacobiVerdict jacobi = JacobiVerdict::marginal;
};

struct EquilibriumSet {
  std::vector<Equilibrium> equilibria;
  std::vector<std::vector<std::size_t>> singular_supports;
};

/// Attaches Lyapunov and Jacobi (at y = 0) verdicts at x.
inline Equilibrium classify_equilibrium(const VectorFieldModel& m, Vector x, std::vector<std::size_t> support) {
  Equilibrium e;
  const Matrix j = jacobian(m, x);
  e.jacobian_spectrum = eigenvalues(j);
  e.lyapunov = lyapunov_verdict(e.jacobian_spectrum, j);
  const DeviationReport dev = jacobi_classify(m, TangentState{x, Vector(x.size(), 0.0)});
  e.deviation_spectrum = dev.spectrum;
  e.jacobi = dev.verdict;
  e.x = std::move(x);
  e.support = std::move(support);
  return e;
}

/// Enumerates supports S (as bitmasks 0 .. 2^n - 1), solving
/// sum_{j in S} a_ij x_j = b_i for i in S and keeping strictly positive
/// solutions. Singular subsystems are listed in singular_supports.
inline EquilibriumSet equilibria(const VectorFieldModel& m) {
  const LotkaVolterraParams* lv = m.lotka_volterra_params();
  if (lv == nullptr) throw ValidationError("equilibria: only Lotka-Volterra systems are supported");
  const std::size_t n = m.dimension();
  if (n > 20) throw ValidationError("equilibria: dimension too large for support enumeration");
  EquilibriumSet out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) support.push_back(i);
    Vector x(n, 0.0);
    if (!support.empty()) {
      const std::size_t k = support.size();
      Matrix sub(k, k);
      Vector rhs(k);
      for (std::size_t r = 0; r < k; ++r) {
        rhs[r] = lv->b[support[r]];
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = lv->a(support[r], support[c]);
      }
      Vector xs;
      try {
        xs = solve_linear(sub, rhs);
      } catch (const SingularMatrixError&) {
        out.singular_supports.push_back(support);
        continue;
      }
      bool positive = true;
      for (double v : xs) positive = positive && v > 0.0;
      if (!positive) continue;
      for (std::size_t r = 0; r < k; ++r) x[support[r]] = xs[r];
    }
    out.equilibria.push_back(classify_equilibrium(m, std::move(x), std::move(support)));
  }
  return out;
}

struct TrajectorySample {
  double t = 0.0;
  Vector x;
  Vector y;  ///< empty for first-order flow trajectories
};

struct Trajectory {
  double h = 0.0;
  std::size_t dimension = 0;
  bool has_velocity = false;
  std::vector<TrajectorySample> samples;
  bool truncated = false;
  double truncated_at = 0.0;
};

/// Magnitude beyond which integration stops and flags truncation.
inline constexpr double kDivergenceBound = 1e12;

namespace detail {

using Rhs = std::function<Vector(const Vector&)>;

inline Vector rk4_step(const Rhs& f, const Vector& u, double h) {
  const std::size_t n = u.size();
  auto axpy = [n](const Vector& a, double s, const Vector& b) {
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  const Vector k1 = f(u);
  const Vector k2 = f(axpy(u, 0.5 * h, k1));
  const Vector k3 = f(axpy(u, 0.5 * h, k2));
  const Vector k4 = f(axpy(u, h, k3));
  Vector next(n);
  for (std::size_t i = 0; i < n; ++i) next[i] = u[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return next;
}

inline bool within_bound(const Vector& u) {
  for (double v : u)
    if (!std::isfinite(v) || std::abs(v) > kDivergenceBound) return false;
  return true;
}

inline void check_step_args(double h, long long steps) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ValidationError("integration step h must be positive and finite");
  if (steps < 1) throw ValidationError("integration needs at least one step");
}

/// Integrates `f` from u0; `record` converts a state to a sample.
template <class Record>
Trajectory integrate(const Rhs& f, Vector u, double h, long long steps, Trajectory traj, Record record) {
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
  traj.samples.push_back(record(0.0, u));
  for (long long k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k) * h;
    Vector next;
    bool ok = true;
    try {
      next = rk4_step(f, u, h);
      ok = within_bound(next);
    } catch (const NumericalError&) {
      ok = false;
    }
    if (!ok) {
      traj.truncated = true;
      traj.truncated_at = t;
      break;
    }
    u = std::move(next);
    traj.samples.push_back(record(t, u));
  }
  return traj;
}

}  // namespace detail

/// Classical RK4 for x' = X(x) on the grid t_k = k h.
inline Trajectory integrate_flow(const VectorFieldModel& m, const Vector& x0, double h, long long steps) {
  m.check_point(x0);
  detail::check_step_args(h, steps);
  Trajectory traj;
  traj.h = h;
  traj.dimension = m.dimension();
  traj.has_velocity = false;
  return detail::integrate([&m](const Vector& u) { return m.evaluate(u); }, x0, h, steps, std::move(traj),
                           [](double t, const Vector& u) { return TrajectorySample{t, u, {}}; });
}

/// Classical RK4 for the first-order form x' = y, y' = -2 G(x, y).
inline Trajectory integrate_euler_lagrange(const VectorFieldModel& m, const Vector& x0, const Vector& y0, double h,
                                           long long steps) {
  m.check_point(x0);
  m.check_point(y0);
  detail::check_step_args(h, steps);
  const std::size_t n = m.dimension();
  Trajectory traj;
  traj.h = h;
  traj.dimension = n;
  traj.has_velocity = true;
  Vector u(x0);
  u.insert(u.end(), y0.begin(), y0.end());
  auto rhs = [&m, n](const Vector& state) {
    const std::span<const double> x(state.data(), n);
    const std::span<const double> y(state.data() + n, n);
    const Vector g = semispray_from(jacobian(m, x), m.evaluate(x), y);
    Vector d(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = y[i];
      d[n + i] = -2.0 * g[i];
    }
    return d;
  };
  return detail::integrate(rhs, std::move(u), h, steps, std::move(traj), [n](double t, const Vector& state) {
    return TrajectorySample{t, Vector(state.begin(), state.begin() + static_cast<std::ptrdiff_t>(n)),
                            Vector(state.begin() + static_cast<std::ptrdiff_t>(n), state.end())};
  });
}

/// Per-sample residual |D2x + 2G(x, Dx)|_inf with central differences;
/// empty at the two end samples.
inline std::vector<std::optional<double>> el_residual_profile(const VectorFieldModel& m, const Trajectory& traj) {
  if (traj.samples.size() < 3) throw ValidationError("el_residual: trajectory needs at least 3 samples");
  const std::size_t n = m.dimension();
  const double h = traj.h;
  std::vector<std::optional<double>> out(traj.samples.size());
  for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
    const Vector& xm = traj.samples[k - 1].x;
    const Vector& x = traj.samples[k].x;
    const Vector& xp = traj.samples[k + 1].x;
    Vector d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
      d1[i] = (xp[i] - xm[i]) / (2.0 * h);
      d2[i] = (xp[i] - 2.0 * x[i] + xm[i]) / (h * h);
    }
    const Vector g = semispray_from(jacobian(m, x), m.evaluate(x), d1);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(d2[i] + 2.0 * g[i]));
    out[k] = r;
  }
  return out;
}

inline double el_residual(const VectorFieldModel& m, const Trajectory& traj) {
  double best = 0.0;
  for (const auto& r : el_residual_profile(m, traj))
    if (r) best = std::max(best, *r);
  return best;
}

}  // namespace lhg
