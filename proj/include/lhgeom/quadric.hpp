#pragma once

// Constant-level surfaces of the Yang-Mills-like energy of a three-species
// Lotka-Volterra field. EYM(x) = 1/4 |A x|^2 with
//   A = [[a12, -a21, 0], [a13, 0, -a31], [0, a23, -a32]],
// so the level set EYM = rho is |A x|^2 = 4 rho, a central quadric.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "lhgeom/error.hpp"
#include "lhgeom/linalg.hpp"
#include "lhgeom/vector_field.hpp"

namespace lhg {

enum class QuadricClass { ellipsoid, elliptic_cylinder, lower_rank_degenerate };

inline std::string_view to_string(QuadricClass c) {
  switch (c) {
    case QuadricClass::ellipsoid: return "ellipsoid";
    case QuadricClass::elliptic_cylinder: return "elliptic_cylinder";
    case QuadricClass::lower_rank_degenerate: return "lower_rank_degenerate";
  }
  return "lower_rank_degenerate";
}

struct QuadricSurface {
  Matrix factor;  ///< A, with M = A^t A
  Matrix form;    ///< M, symmetric positive semidefinite
  SymmetricEigen eigen;
  std::size_t rank = 0;
  QuadricClass classification = QuadricClass::lower_rank_degenerate;
  double factor_determinant = 0.0;  ///< a12 a23 a31 - a13 a21 a32
};

inline QuadricSurface energy_quadratic_form(const VectorFieldModel& m) {
  const LotkaVolterraParams* lv = m.lotka_volterra_params();
  if (lv == nullptr || m.dimension() != 3)
    throw ValidationError("energy quadric requires a three-species Lotka-Volterra system");
  const Matrix& a = lv->a;
  QuadricSurface q;
  q.factor = Matrix{{a(0, 1), -a(1, 0), 0.0}, {a(0, 2), 0.0, -a(2, 0)}, {0.0, a(1, 2), -a(2, 1)}};
  q.form = q.factor.transpose() * q.factor;
  // Symmetrize exactly; the product is symmetric only up to summation order.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) q.form(j, i) = q.form(i, j);
  q.factor_determinant = determinant(q.factor);
  q.eigen = symmetric_eigen(q.form);
  const double top = q.eigen.values.back();
  q.rank = 0;
  for (double v : q.eigen.values)
    if (top > 0.0 && v > 1e-9 * top) ++q.rank;
  q.classification = q.rank == 3   ? QuadricClass::ellipsoid
                     : q.rank == 2 ? QuadricClass::elliptic_cylinder
                                   : QuadricClass::lower_rank_degenerate;
  return q;
}

/// 1/4 x^t M x, equal to the Yang-Mills-like energy at x.
inline double quadric_energy(const QuadricSurface& q, std::span<const double> x) {
  const Vector mx = q.form * x;
  return 0.25 * dot(x, mx);
}

/// Left side of the level equation, |A x|^2 (equals 4 rho on the surface).
inline double level_equation_lhs(const QuadricSurface& q, std::span<const double> x) {
  const Vector ax = q.factor * x;
  return dot(ax, ax);
}

struct SurfaceMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::size_t, 4>> quads;  ///< 0-based vertex indices
};

/// Samples the surface EYM = rho on a resolution x resolution grid. The
/// ellipsoid uses a (theta, phi) sphere grid; the cylinder uses rings times
/// axial positions in [-axial_half_length, axial_half_length]. Each vertex is
/// rescaled radially onto the level set.
inline SurfaceMesh sample_surface(const QuadricSurface& q, double rho, std::size_t resolution,
                                  double axial_half_length = 10.0) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw ValidationError("level rho must be finite and >= 0");
  if (resolution < 8) throw ValidationError("surface resolution must be >= 8");
  if (!(axial_half_length > 0.0)) throw ValidationError("cylinder half-length must be positive");
  SurfaceMesh mesh;
  if (rho == 0.0) {
    mesh.vertices.push_back({0.0, 0.0, 0.0});
    return mesh;
  }
  if (q.classification == QuadricClass::lower_rank_degenerate)
    throw ValidationError("degenerate quadric with rho > 0 is not meshed");

  const std::size_t res = resolution;
  const auto& u = q.eigen.vectors;
  const auto& lam = q.eigen.values;
  auto column = [&u](std::size_t c, double s, std::array<double, 3>& acc) {
    for (std::size_t r = 0; r < 3; ++r) acc[r] += s * u(r, c);
  };
  auto project = [&q, rho](std::array<double, 3>& p) {
    const double e = quadric_energy(q, p);
    const double s = std::sqrt(rho / e);
    for (double& v : p) v *= s;
  };

  mesh.vertices.reserve(res * res);
  if (q.classification == QuadricClass::ellipsoid) {
    for (std::size_t i = 0; i < res; ++i) {
      const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(res - 1);
      for (std::size_t j = 0; j < res; ++j) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(res);
        const std::array<double, 3> v{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                      std::cos(theta)};
        std::array<double, 3> p{0.0, 0.0, 0.0};
        for (std::size_t c = 0; c < 3; ++c) column(c, std::sqrt(4.0 * rho / lam[c]) * v[c], p);
        project(p);
        mesh.vertices.push_back(p);
      }
    }
  } else {
    // eigen.values ascending: column 0 is the axis.
    for (std::size_t i = 0; i < res; ++i) {
      const double s = -axial_half_length + 2.0 * axial_half_length * static_cast<double>(i) /
                                                static_cast<double>(res - 1);
      for (std::size_t j = 0; j < res; ++j) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(res);
        std::array<double, 3> c{0.0, 0.0, 0.0};
        column(1, std::sqrt(4.0 * rho / lam[1]) * std::cos(phi), c);
        column(2, std::sqrt(4.0 * rho / lam[2]) * std::sin(phi), c);
        project(c);
        column(0, s, c);
        mesh.vertices.push_back(c);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < res; ++i)
    for (std::size_t j = 0; j < res; ++j) {
      const std::size_t jn = (j + 1) % res;
      mesh.quads.push_back({i * res + j, (i + 1) * res + j, (i + 1) * res + jn, i * res + jn});
    }
  return mesh;
}

}  // namespace lhg
