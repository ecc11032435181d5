#pragma once

// KCC deviation geometry of the Euler-Lagrange system x'' + 2G(x, x') = 0
// produced by the least-squares Lagrangian.

#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include "lhgeom/lagrange.hpp"
#include "lhgeom/linalg.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

enum class JacobiVerdict { jacobi_stable, jacobi_unstable, marginal };

inline std::string_view to_string(JacobiVerdict v) {
  switch (v) {
    case JacobiVerdict::jacobi_stable: return "jacobi_stable";
    case JacobiVerdict::jacobi_unstable: return "jacobi_unstable";
    case JacobiVerdict::marginal: return "marginal";
  }
  return "marginal";
}

/// E^i = -1/2 (J_ij - J_ji) y^j - J_ji X^j.
inline Vector first_invariant(const VectorFieldModel& m, const TangentState& s) {
  check_state(m, s);
  const Matrix j = jacobian(m, s.x);
  const Vector fx = m.evaluate(s.x);
  const std::size_t n = fx.size();
  Vector e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double twist = 0.0, grad = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      twist += (j(i, r) - j(r, i)) * s.y[r];
      grad += j(r, i) * fx[r];
    }
    e[i] = -0.5 * twist - grad;
  }
  return e;
}

/// The same invariant through its definition E^i = 2G^i - N^i_j y^j.
inline Vector first_invariant_from_semispray(const VectorFieldModel& m, const TangentState& s) {
  const Vector g = semispray(m, s);
  const Vector ny = nonlinear_connection(m, s.x) * std::span<const double>(s.y);
  Vector e(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) e[i] = 2.0 * g[i] - ny[i];
  return e;
}

/// Matrix of adapted derivatives dE^i/dx^j - N^r_j dE^i/dy^r, closed form.
inline Matrix e_matrix(const VectorFieldModel& m, const TangentState& s) {
  check_state(m, s);
  const std::size_t n = m.dimension();
  const Matrix j = jacobian(m, s.x);
  const Vector fx = m.evaluate(s.x);
  const std::vector<Matrix> h = hessians(m, s.x);
  Matrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      double v = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        v += -0.5 * (h[i](c, k) - h[k](i, c)) * s.y[k];
        v -= h[k](i, c) * fx[k];
        v -= j(k, i) * j(k, c);
        v -= 0.25 * (j(k, c) - j(c, k)) * (j(i, k) - j(k, i));
      }
      e(i, c) = v;
    }
  return e;
}

/// P = (dN/dx^k) y^k + E-matrix.
inline Matrix deviation_matrix(const VectorFieldModel& m, const TangentState& s) {
  Matrix p = e_matrix(m, s);
  const std::vector<Matrix> r = d_torsions(m, s.x);
  for (std::size_t k = 0; k < r.size(); ++k) p += r[k] * s.y[k];
  return p;
}

/// Real parts within this band of zero are reported as marginal.
inline double jacobi_marginal_band(const Matrix& p) { return 1e-9 * (1.0 + p.norm_inf()); }

struct DeviationReport {
  Vector first_invariant;
  Matrix e_matrix;
  Matrix p_matrix;
  ComplexSpectrum spectrum;
  JacobiVerdict verdict = JacobiVerdict::marginal;
};

inline JacobiVerdict jacobi_verdict(const ComplexSpectrum& spectrum, const Matrix& p) {
  switch (classify_real_parts(spectrum, jacobi_marginal_band(p))) {
    case SpectralSign::negative: return JacobiVerdict::jacobi_stable;
    case SpectralSign::positive: return JacobiVerdict::jacobi_unstable;
    case SpectralSign::marginal: return JacobiVerdict::marginal;
  }
  return JacobiVerdict::marginal;
}

/// Jacobi stable iff every eigenvalue of P has real part below -band.
inline DeviationReport jacobi_classify(const VectorFieldModel& m, const TangentState& s) {
  DeviationReport r;
  r.first_invariant = first_invariant(m, s);
  r.e_matrix = e_matrix(m, s);
  r.p_matrix = r.e_matrix;
  const std::vector<Matrix> tors = d_torsions(m, s.x);
  for (std::size_t k = 0; k < tors.size(); ++k) r.p_matrix += tors[k] * s.y[k];
  r.spectrum = eigenvalues(r.p_matrix);
  r.verdict = jacobi_verdict(r.spectrum, r.p_matrix);
  return r;
}

}  // namespace lhg
