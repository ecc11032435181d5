#pragma once

// Cotangent-bundle side: least-squares Hamiltonian H = 1/4 |p|^2 + <X(x), p>,
// its canonical nonlinear connection and d-torsions. As on the tangent side
// the canonical Cartan linear connection vanishes and is not represented.

#include <cstddef>
#include <span>
#include <vector>

#include "lhgeom/lagrange.hpp"
#include "lhgeom/linalg.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

/// Point (x, p) of the cotangent bundle.
struct CotangentState {
  Vector x;
  Vector p;
};

inline double hamiltonian(const VectorFieldModel& m, const CotangentState& s) {
  m.check_point(s.x);
  m.check_point(s.p);
  const Vector fx = m.evaluate(s.x);
  return 0.25 * dot(s.p, s.p) + dot(fx, s.p);
}

/// p_r = dL/dy^r = 2 (y^r - X^r(x)).
inline CotangentState legendre_momenta(const VectorFieldModel& m, const TangentState& s) {
  check_state(m, s);
  const Vector fx = m.evaluate(s.x);
  CotangentState c{s.x, Vector(fx.size())};
  for (std::size_t r = 0; r < fx.size(); ++r) c.p[r] = 2.0 * (s.y[r] - fx[r]);
  return c;
}

/// dH/dp_i = p_i / 2 + X^i.
inline Vector hamilton_velocity(const VectorFieldModel& m, const CotangentState& s) {
  m.check_point(s.p);
  Vector v = m.evaluate(s.x);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += 0.5 * s.p[i];
  return v;
}

/// N_ij = d^2H/dx^j dp_i + d^2H/dx^i dp_j = J + J^t.
inline Matrix hamilton_connection_from_jacobian(const Matrix& j) {
  const std::size_t n = j.rows();
  Matrix nh(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) nh(r, c) = nh(c, r) = j(r, c) + j(c, r);
  return nh;
}

inline Matrix hamilton_connection(const VectorFieldModel& m, std::span<const double> x) {
  return hamilton_connection_from_jacobian(jacobian(m, x));
}

/// R_k[i][j] = dN_ki/dx^j - dN_kj/dx^i. The adapted derivative
/// d/dx^j - N_rj d/dp_r reduces to d/dx^j because N_h does not depend on p.
inline std::vector<Matrix> hamilton_torsions_from_hessians(const std::vector<Matrix>& h) {
  const std::size_t n = h.size();
  // dN_ab/dx^c = d^2X^a/dx^b dx^c + d^2X^b/dx^a dx^c
  auto dconn = [&h](std::size_t a, std::size_t b, std::size_t c) { return h[a](b, c) + h[b](a, c); };
  std::vector<Matrix> out(n, Matrix(n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        out[k](i, j) = dconn(k, i, j) - dconn(k, j, i);
        out[k](j, i) = -out[k](i, j);
      }
  return out;
}

inline std::vector<Matrix> hamilton_torsions(const VectorFieldModel& m, std::span<const double> x) {
  return hamilton_torsions_from_hessians(hessians(m, x));
}

struct HamiltonGeometry {
  Matrix connection;
  std::vector<Matrix> torsions;
};

inline HamiltonGeometry hamilton_geometry(const VectorFieldModel& m, std::span<const double> x) {
  return {hamilton_connection(m, x), hamilton_torsions(m, x)};
}

}  // namespace lhg
