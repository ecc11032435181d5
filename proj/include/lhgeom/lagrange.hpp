#pragma once

// Tangent-bundle objects of the least-squares Lagrangian L = |y - X(x)|^2:
// semispray, canonical nonlinear connection, d-torsions and the
// Yang-Mills-like energy. The canonical Cartan linear connection of this
// Lagrangian has all adapted components zero, so it is not represented.
//
// Sign convention: everything is built from the analytic Jacobian of X. For
// Lotka-Volterra fields this gives J_ij = -a_ij x_i off the diagonal, so the
// explicit off-diagonal entries of N and R_k are the negatives of the
// commonly printed ones; skew-symmetry and the energy are unaffected.

#include <cstddef>
#include <span>
#include <vector>

#include "lhgeom/linalg.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

/// Point (x, y) of the tangent bundle: position and velocity.
struct TangentState {
  Vector x;
  Vector y;
};

inline void check_state(const VectorFieldModel& m, const TangentState& s) {
  m.check_point(s.x);
  m.check_point(s.y);
}

inline double lagrangian(const VectorFieldModel& m, const TangentState& s) {
  check_state(m, s);
  const Vector fx = m.evaluate(s.x);
  double l = 0.0;
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const double d = s.y[i] - fx[i];
    l += d * d;
  }
  return l;
}

/// G^k = -1/2 [ (J_kj - J_jk) y^j + J_jk X^j ].
inline Vector semispray_from(const Matrix& j, std::span<const double> fx, std::span<const double> y) {
  const std::size_t n = fx.size();
  Vector g(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += (j(k, r) - j(r, k)) * y[r] + j(r, k) * fx[r];
    g[k] = -0.5 * s;
  }
  return g;
}

inline Vector semispray(const VectorFieldModel& m, const TangentState& s) {
  check_state(m, s);
  return semispray_from(jacobian(m, s.x), m.evaluate(s.x), s.y);
}

/// N = -1/2 (J - J^t); skew-symmetric by construction.
inline Matrix connection_from_jacobian(const Matrix& j) {
  const std::size_t n = j.rows();
  Matrix nc(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      nc(r, c) = -0.5 * (j(r, c) - j(c, r));
      nc(c, r) = -nc(r, c);
    }
  return nc;
}

inline Matrix nonlinear_connection(const VectorFieldModel& m, std::span<const double> x) {
  return connection_from_jacobian(jacobian(m, x));
}

/// R_k = dN/dx^k, from per-component Hessians H[i](j,k) = d^2X^i/dx^j dx^k.
inline std::vector<Matrix> torsions_from_hessians(const std::vector<Matrix>& h) {
  const std::size_t n = h.size();
  std::vector<Matrix> out(n, Matrix(n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        // d/dx^k of -1/2 (dX^i/dx^j - dX^j/dx^i)
        out[k](i, j) = -0.5 * (h[i](j, k) - h[j](i, k));
        out[k](j, i) = -out[k](i, j);
      }
  return out;
}

inline std::vector<Matrix> d_torsions(const VectorFieldModel& m, std::span<const double> x) {
  return torsions_from_hessians(hessians(m, x));
}

/// 1/2 trace(F F^t) with F = -N.
inline double energy_from_connection(const Matrix& nc) {
  const Matrix f = -nc;
  return 0.5 * (f * f.transpose()).trace();
}

inline double yang_mills_energy(const VectorFieldModel& m, std::span<const double> x) {
  return energy_from_connection(nonlinear_connection(m, x));
}

/// Objects of the Lagrangian side at one point.
struct LagrangeGeometry {
  Matrix connection;
  std::vector<Matrix> torsions;
  double energy = 0.0;
};

inline LagrangeGeometry lagrange_geometry(const VectorFieldModel& m, std::span<const double> x) {
  LagrangeGeometry g;
  g.connection = nonlinear_connection(m, x);
  g.torsions = d_torsions(m, x);
  g.energy = energy_from_connection(g.connection);
  return g;
}

}  // namespace lhg
