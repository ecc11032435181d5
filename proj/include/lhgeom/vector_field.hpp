#pragma once

// Vector fields X: R^n -> R^n given by polynomial component expressions, with
// cached exact first and second derivatives.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lhgeom/error.hpp"
#include "lhgeom/expression.hpp"
#include "lhgeom/linalg.hpp"

namespace lhg {

/// Competition coefficients a_ij and intrinsic growth rates b_i of
/// x_i' = x_i (b_i - sum_j a_ij x_j).
struct LotkaVolterraParams {
  Matrix a;
  Vector b;
};

/// Immutable after construction; all indices below are 0-based.
class VectorFieldModel {
public:
  /// General polynomial field. Throws ValidationError if n < 2 or an
  /// expression references a variable beyond n.
  static VectorFieldModel custom(std::vector<Expression> components) {
    return VectorFieldModel(std::move(components), std::nullopt);
  }

  std::size_t dimension() const noexcept { return n_; }
  bool is_lotka_volterra() const noexcept { return lv_.has_value(); }
  /// Coefficients for the LV kind, nullptr otherwise.
  const LotkaVolterraParams* lotka_volterra_params() const noexcept { return lv_ ? &*lv_ : nullptr; }

  const Expression& component(std::size_t i) const { return components_.at(i); }
  /// dX^i/dx^j
  const Expression& first_derivative(std::size_t i, std::size_t j) const { return first_.at(i * n_ + j); }
  /// d^2 X^i / dx^j dx^k; the same expression object is stored for (j,k) and (k,j).
  const Expression& second_derivative(std::size_t i, std::size_t j, std::size_t k) const {
    return second_.at((i * n_ + j) * n_ + k);
  }

  /// X(x).
  Vector evaluate(std::span<const double> x) const {
    check_point(x);
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = components_[i].evaluate(x);
    return out;
  }

  void check_point(std::span<const double> x) const {
    if (x.size() != n_)
      throw ValidationError("point has dimension " + std::to_string(x.size()) + ", model has " +
                            std::to_string(n_));
  }

private:
  friend VectorFieldModel lotka_volterra(Matrix a, Vector b);

  VectorFieldModel(std::vector<Expression> components, std::optional<LotkaVolterraParams> lv)
      : n_(components.size()), components_(std::move(components)), lv_(std::move(lv)) {
    if (n_ < 2) throw ValidationError("vector field dimension must be >= 2");
    for (std::size_t i = 0; i < n_; ++i)
      if (components_[i].max_variable() > n_)
        throw ValidationError("component " + std::to_string(i + 1) + " references a variable beyond x" +
                              std::to_string(n_));
    first_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) first_.push_back(differentiate(components_[i], j + 1));
    second_.assign(n_ * n_ * n_, Expression{});
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = j; k < n_; ++k) {
          Expression d = differentiate(first_[i * n_ + j], k + 1);
          second_[(i * n_ + j) * n_ + k] = d;
          second_[(i * n_ + k) * n_ + j] = d;
        }
  }

  std::size_t n_;
  std::vector<Expression> components_;
  std::vector<Expression> first_;
  std::vector<Expression> second_;
  std::optional<LotkaVolterraParams> lv_;
};

/// Builds x_i (b_i - a_i1 x_1 - ... - a_in x_n). Requires a square n x n
/// (n >= 2), b of length n, and every a_ij, b_i strictly positive.
inline VectorFieldModel lotka_volterra(Matrix a, Vector b) {
  const std::size_t n = b.size();
  if (!a.square() || a.rows() != n)
    throw ValidationError("Lotka-Volterra: coefficient matrix must be " + std::to_string(n) + "x" +
                          std::to_string(n) + " to match b");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(b[i] > 0.0) || !std::isfinite(b[i]))
      throw ValidationError("Lotka-Volterra: b" + std::to_string(i + 1) + " must be strictly positive");
    for (std::size_t j = 0; j < n; ++j)
      if (!(a(i, j) > 0.0) || !std::isfinite(a(i, j)))
        throw ValidationError("Lotka-Volterra: a" + std::to_string(i + 1) + std::to_string(j + 1) +
                              " must be strictly positive");
  }
  std::vector<Expression> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Expression rate = Expression::constant(b[i]);
    for (std::size_t j = 0; j < n; ++j)
      rate = Expression::subtract(rate, Expression::multiply(Expression::constant(a(i, j)),
                                                             Expression::variable(j + 1)));
    comps.push_back(Expression::multiply(Expression::variable(i + 1), rate));
  }
  return VectorFieldModel(std::move(comps), LotkaVolterraParams{std::move(a), std::move(b)});
}

/// Custom field from component source texts.
inline VectorFieldModel custom_field(std::span<const std::string> sources) {
  const std::size_t n = sources.size();
  std::vector<Expression> comps;
  comps.reserve(n);
  for (const auto& s : sources) comps.push_back(parse_expression(s, n));
  return VectorFieldModel::custom(std::move(comps));
}

/// J[i][j] = dX^i/dx^j at x.
inline Matrix jacobian(const VectorFieldModel& m, std::span<const double> x) {
  m.check_point(x);
  const std::size_t n = m.dimension();
  Matrix j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) j(r, c) = m.first_derivative(r, c).evaluate(x);
  return j;
}

/// H[j][k] = d^2 X^i / dx^j dx^k at x; exactly symmetric.
inline Matrix hessian_component(const VectorFieldModel& m, std::size_t i, std::span<const double> x) {
  m.check_point(x);
  const std::size_t n = m.dimension();
  if (i >= n) throw ValidationError("hessian_component: component index out of range");
  Matrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) h(j, k) = h(k, j) = m.second_derivative(i, j, k).evaluate(x);
  return h;
}

/// All component Hessians at x, indexed by component.
inline std::vector<Matrix> hessians(const VectorFieldModel& m, std::span<const double> x) {
  std::vector<Matrix> out;
  out.reserve(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i) out.push_back(hessian_component(m, i, x));
  return out;
}

}  // namespace lhg
