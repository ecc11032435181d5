#pragma once

// Test-only oracles. Nothing here calls the closed forms under test: the
// derivative oracles only evaluate X, L, H or E, and the spectrum oracle
// finds roots of det(lambda I - A) by Durand-Kerner iteration, evaluating
// the determinant by elimination.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "lhgeom/lhgeom.hpp"

namespace oracle {

using lhg::Matrix;
using lhg::Vector;

/// Reference systems used across the suite.
inline lhg::VectorFieldModel s1() { return lhg::lotka_volterra(Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, {4, 4, 4}); }
inline lhg::VectorFieldModel s2() { return lhg::lotka_volterra(Matrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {1, 1, 1}); }
inline lhg::VectorFieldModel s3() {
  return lhg::lotka_volterra(Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}, {1, 2, 3});
}
inline lhg::VectorFieldModel zero_field(std::size_t n = 3) {
  return lhg::VectorFieldModel::custom(std::vector<lhg::Expression>(n, lhg::Expression::constant(0.0)));
}

/// Uniform on (0, hi].
inline double positive(std::mt19937_64& rng, double hi) {
  std::uniform_real_distribution<double> d(0.0, hi);
  double v = 0.0;
  while (v == 0.0) v = hi - d(rng);
  return v;
}

inline Vector random_positive_vector(std::mt19937_64& rng, std::size_t n, double hi) {
  Vector v(n);
  for (double& e : v) e = positive(rng, hi);
  return v;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  Vector v(n);
  for (double& e : v) e = d(rng);
  return v;
}

inline lhg::VectorFieldModel random_lv(std::mt19937_64& rng, std::size_t n = 3, double hi = 10.0) {
  Matrix a(n, n);
  for (double& e : a.data()) e = positive(rng, hi);
  return lhg::lotka_volterra(a, random_positive_vector(rng, n, hi));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  Matrix a(n, n);
  for (double& e : a.data()) e = d(rng);
  return a;
}

/// Central difference of a vector function along coordinate j.
inline Vector central_diff(const std::function<Vector(const Vector&)>& f, Vector x, std::size_t j, double h) {
  const double x0 = x[j];
  x[j] = x0 + h;
  const Vector fp = f(x);
  x[j] = x0 - h;
  const Vector fm = f(x);
  Vector d(fp.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (fp[i] - fm[i]) / (2.0 * h);
  return d;
}

/// J by central differences of X.
inline Matrix fd_jacobian(const lhg::VectorFieldModel& m, const Vector& x, double h = 1e-5) {
  const std::size_t n = m.dimension();
  Matrix j(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector col = central_diff([&m](const Vector& p) { return m.evaluate(p); }, x, c, h);
    for (std::size_t r = 0; r < n; ++r) j(r, c) = col[r];
  }
  return j;
}

/// Hessian of component i by central differences of the analytic Jacobian row.
inline Matrix fd_hessian_row(const lhg::VectorFieldModel& m, std::size_t i, const Vector& x, double h = 1e-5) {
  const std::size_t n = m.dimension();
  Matrix out(n, n);
  auto row = [&m, i, n](const Vector& p) {
    const Matrix jj = lhg::jacobian(m, p);
    Vector r(n);
    for (std::size_t c = 0; c < n; ++c) r[c] = jj(i, c);
    return r;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Vector d = central_diff(row, x, k, h);
    for (std::size_t j = 0; j < n; ++j) out(j, k) = d[j];
  }
  return out;
}

/// 2G^k from the Euler-Lagrange equations of L. With d^2L/dy dy = 2I they read
/// 2 x''^k + (d^2L/dx^j dy^k) y^j - dL/dx^k = 0, so
/// 2G^k = 1/2 [(d^2L/dx^j dy^k) y^j - dL/dx^k]; all derivatives of L by finite differences.
inline Vector fd_twice_semispray(const lhg::VectorFieldModel& m, const lhg::TangentState& s, double h = 1e-4) {
  const std::size_t n = m.dimension();
  auto L = [&m](const Vector& x, const Vector& y) { return lhg::lagrangian(m, {x, y}); };
  Vector out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double mixed_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      Vector xp = s.x, xm = s.x, yp = s.y, ym = s.y;
      xp[j] += h;
      xm[j] -= h;
      yp[k] += h;
      ym[k] -= h;
      const double mixed = (L(xp, yp) - L(xp, ym) - L(xm, yp) + L(xm, ym)) / (4.0 * h * h);
      mixed_sum += mixed * s.y[j];
    }
    Vector xp = s.x, xm = s.x;
    xp[k] += h;
    xm[k] -= h;
    const double dLdx = (L(xp, s.y) - L(xm, s.y)) / (2.0 * h);
    out[k] = 0.5 * (mixed_sum - dLdx);
  }
  return out;
}

/// Adapted derivative d/dx^j - N^r_j d/dy^r of E^i = 2G^i - N^i_r y^r, by a
/// central difference along the direction (e_j, -N_{.j}).
inline Matrix fd_e_matrix(const lhg::VectorFieldModel& m, const lhg::TangentState& s, double h = 1e-5) {
  const std::size_t n = m.dimension();
  const Matrix nc = lhg::nonlinear_connection(m, s.x);
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    lhg::TangentState plus = s, minus = s;
    plus.x[j] += h;
    minus.x[j] -= h;
    for (std::size_t r = 0; r < n; ++r) {
      plus.y[r] -= h * nc(r, j);
      minus.y[r] += h * nc(r, j);
    }
    const Vector ep = lhg::first_invariant_from_semispray(m, plus);
    const Vector em = lhg::first_invariant_from_semispray(m, minus);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = (ep[i] - em[i]) / (2.0 * h);
  }
  return out;
}

/// N^H_ij = d^2H/dx^j dp_i + d^2H/dx^i dp_j with mixed differences of H.
/// H is low-degree polynomial, so a wide step only cuts rounding error.
inline Matrix fd_hamilton_connection(const lhg::VectorFieldModel& m, const Vector& x, const Vector& p,
                                     double h = 1e-2) {
  const std::size_t n = m.dimension();
  auto H = [&m](const Vector& xx, const Vector& pp) { return lhg::hamiltonian(m, {xx, pp}); };
  auto mixed = [&](std::size_t xi, std::size_t pi) {
    Vector xp = x, xm = x, pp = p, pm = p;
    xp[xi] += h;
    xm[xi] -= h;
    pp[pi] += h;
    pm[pi] -= h;
    return (H(xp, pp) - H(xp, pm) - H(xm, pp) + H(xm, pm)) / (4.0 * h * h);
  };
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = mixed(j, i) + mixed(i, j);
  return out;
}

/// det(A - lambda I) for complex lambda by complex Gaussian elimination.
inline std::complex<double> char_det(const Matrix& a, std::complex<double> lambda) {
  const std::size_t n = a.rows();
  std::vector<std::complex<double>> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j) - (i == j ? lambda : 0.0);
  std::complex<double> det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
    if (m[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      det = -det;
    }
    det *= m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto f = m[i * n + k] / m[k * n + k];
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return det;
}

/// Brute-force spectrum: Durand-Kerner iteration on p(lambda) = det(lambda I - A),
/// each evaluation done by elimination rather than from coefficients.
inline std::vector<std::complex<double>> brute_force_spectrum(const Matrix& a) {
  const std::size_t n = a.rows();
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // det(lambda I - A) = (-1)^n det(A - lambda I)
  auto p = [&](std::complex<double> z) { return sign * char_det(a, z); };
  const double radius = 1.0 + a.norm_inf();
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius, 0.4 + 2.0 * M_PI * static_cast<double>(k) / n);
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      if (denom == 0.0) denom = 1e-300;
      const auto step = p(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * radius) break;
  }
  return z;
}

/// Max over a of min over b of |a - b|, symmetric greedy matching of two multisets.
inline double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return HUGE_VAL;
  double worst = 0.0;
  for (const auto& x : a) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < b.size(); ++k)
      if (std::abs(b[k] - x) < std::abs(b[best] - x)) best = k;
    worst = std::max(worst, std::abs(b[best] - x));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

inline std::vector<std::complex<double>> to_vector(const lhg::ComplexSpectrum& s) {
  return {s.begin(), s.end()};
}

}  // namespace oracle
