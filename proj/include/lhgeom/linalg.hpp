#pragma once

// Dense small-matrix arithmetic, linear solves and real nonsymmetric
// eigenvalues: closed-form characteristic-polynomial roots for n <= 3,
// Householder-Hessenberg reduction plus Francis double-shift QR otherwise.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lhgeom/error.hpp"

namespace lhg {

using Vector = std::vector<double>;

/// Row-major dense real matrix with dimensions fixed at construction.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ValidationError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  /// Maximum absolute row sum.
  double norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  double max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_skew_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ValidationError("matrix dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline Vector operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw ValidationError("matrix-vector dimension mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline double norm_inf(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Solves A x = b by Gaussian elimination with partial pivoting. Throws
/// SingularMatrixError when a pivot falls below 1e-12 times the largest
/// entry of A.
inline Vector solve_linear(Matrix a, Vector b) {
  if (!a.square()) throw ValidationError("solve_linear: matrix is not square");
  const std::size_t n = a.rows();
  if (b.size() != n) throw ValidationError("solve_linear: right-hand side dimension mismatch");
  const double scale = a.max_abs();
  const double tiny = 1e-12 * scale;
  if (scale == 0.0 && n > 0) throw SingularMatrixError("solve_linear: zero matrix");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) <= tiny) throw SingularMatrixError("solve_linear: singular matrix");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      a(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
    x[ii] = s / a(ii, ii);
  }
  return x;
}

inline double determinant(const Matrix& a) {
  if (!a.square()) throw ValidationError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  switch (n) {
    case 0: return 1.0;
    case 1: return a(0, 0);
    case 2: return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default: break;
  }
  Matrix lu = a;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

/// Multiset of eigenvalues, kept sorted by (real, imag) so that equal inputs
/// always produce identical sequences.
class ComplexSpectrum {
public:
  using value_type = std::complex<double>;

  ComplexSpectrum() = default;
  explicit ComplexSpectrum(std::vector<value_type> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), [](const value_type& a, const value_type& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
  }

  std::span<const value_type> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const value_type& operator[](std::size_t i) const { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double max_real() const {
    double best = -HUGE_VAL;
    for (const auto& v : values_) best = std::max(best, v.real());
    return best;
  }
  value_type sum() const {
    value_type s{0.0, 0.0};
    for (const auto& v : values_) s += v;
    return s;
  }
  value_type product() const {
    value_type p{1.0, 0.0};
    for (const auto& v : values_) p *= v;
    return p;
  }

private:
  std::vector<value_type> values_;
};

/// Sign class of the largest real part of a spectrum relative to a band.
enum class SpectralSign { negative, positive, marginal };

inline SpectralSign classify_real_parts(const ComplexSpectrum& s, double band) {
  const double m = s.max_real();
  if (m < -band) return SpectralSign::negative;
  if (m > band) return SpectralSign::positive;
  return SpectralSign::marginal;
}

/// Monic characteristic polynomial coefficients [1, c_{n-1}, ..., c_0] of a
/// square matrix with n <= 3, in descending powers.
inline std::vector<double> characteristic_polynomial(const Matrix& a) {
  if (!a.square()) throw ValidationError("characteristic_polynomial: matrix is not square");
  switch (a.rows()) {
    case 1: return {1.0, -a(0, 0)};
    case 2: return {1.0, -a.trace(), determinant(a)};
    case 3: {
      const double minors = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) +
                            (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
                            (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
      return {1.0, -a.trace(), minors, -determinant(a)};
    }
    default:
      throw ValidationError("characteristic_polynomial: only n <= 3 is supported");
  }
}

namespace detail {

inline void quadratic_roots(double b, double c, std::vector<std::complex<double>>& out) {
  // lambda^2 + b lambda + c
  const double half = -0.5 * b;
  const double disc = half * half - c;
  if (disc >= 0.0) {
    const double s = half + std::copysign(std::sqrt(disc), half);
    if (s == 0.0) {
      out.emplace_back(0.0, 0.0);
      out.emplace_back(0.0, 0.0);
    } else {
      out.emplace_back(s, 0.0);
      out.emplace_back(c / s, 0.0);
    }
  } else {
    const double im = std::sqrt(-disc);
    out.emplace_back(half, im);
    out.emplace_back(half, -im);
  }
}

inline double cubic_value(double a, double b, double c, double x) {
  return ((x + a) * x + b) * x + c;
}

inline void cubic_roots(double a, double b, double c, std::vector<std::complex<double>>& out) {
  // lambda^3 + a lambda^2 + b lambda + c, reduced to t^3 + p t + q with lambda = t - a/3.
  const double shift = a / 3.0;
  const double p = b - a * shift;
  const double q = (2.0 * shift * shift - b) * shift + c;

  double root;
  if (p == 0.0 && q == 0.0) {
    root = -shift;
  } else {
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    double t;
    if (disc > 0.0) {
      const double u = std::cbrt(-0.5 * q - std::copysign(std::sqrt(disc), q));
      t = u == 0.0 ? 0.0 : u - p / (3.0 * u);
    } else {
      const double r = std::sqrt(-p / 3.0);
      double arg = (1.5 * q / p) / r;
      arg = std::clamp(arg, -1.0, 1.0);
      const double theta = std::acos(arg) / 3.0;
      // The largest-magnitude trigonometric root is the best separated one.
      t = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double tk = 2.0 * r * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
        if (std::abs(tk) > std::abs(t)) t = tk;
      }
    }
    root = t - shift;
  }

  // Newton polish, accepted only while the residual shrinks.
  double f = cubic_value(a, b, c, root);
  for (int it = 0; it < 8 && f != 0.0; ++it) {
    const double df = (3.0 * root + 2.0 * a) * root + b;
    if (df == 0.0) break;
    const double next = root - f / df;
    const double fn = cubic_value(a, b, c, next);
    if (!(std::abs(fn) < std::abs(f))) break;
    root = next;
    f = fn;
  }

  const double q1 = a + root;
  const double q0 = std::abs(root) > 1.0 ? -c / root : b + root * q1;
  out.emplace_back(root, 0.0);
  quadratic_roots(q1, q0, out);
}

inline void hessenberg_reduce(Matrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm = std::hypot(norm, h(i, k));
    if (norm == 0.0) continue;
    const double alpha = -std::copysign(norm, h(k + 1, k));
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // H <- (I - beta v v^T) H
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += v[i] * h(i, j);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
    }
    // H <- H (I - beta v v^T)
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= beta;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * v[j];
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

/// Francis double-shift QR on an upper Hessenberg matrix (destroyed).
inline void hessenberg_qr(Matrix& hm, std::vector<std::complex<double>>& out,
                          int max_iterations_per_root) {
  const int n = static_cast<int>(hm.rows());
  // 1-based accessor keeps the classical index arithmetic readable.
  auto a = [&hm](int i, int j) -> double& { return hm(i - 1, j - 1); };
  std::vector<double> wr(n + 1, 0.0), wi(n + 1, 0.0);

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

  int nn = n;
  double t = 0.0;
  double x = 0, y = 0, z = 0, w = 0, p = 0, q = 0, r = 0, s = 0;
  while (nn >= 1) {
    int its = 0;
    int l;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn] = z;
            wi[nn - 1] = -z;
          }
          nn -= 2;
        } else {
          if (its == max_iterations_per_root)
            throw NumericalError("eigenvalues: QR iteration did not converge");
          if (its % 10 == 0 && its > 0) {
            // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = std::copysign(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  for (int i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
}

}  // namespace detail

/// Roots of a monic polynomial given in descending powers, degree 1 to 3.
inline ComplexSpectrum polynomial_roots(std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs[0] == 0.0)
    throw ValidationError("polynomial_roots: leading coefficient must be nonzero");
  std::vector<double> c(coeffs.begin(), coeffs.end());
  for (double& v : c) v /= coeffs[0];
  std::vector<std::complex<double>> out;
  switch (c.size() - 1) {
    case 1: out.emplace_back(-c[1], 0.0); break;
    case 2: detail::quadratic_roots(c[1], c[2], out); break;
    case 3: detail::cubic_roots(c[1], c[2], c[3], out); break;
    default: throw ValidationError("polynomial_roots: degree must be 1, 2 or 3");
  }
  return ComplexSpectrum(std::move(out));
}

/// Eigenvalues of a real square matrix.
inline ComplexSpectrum eigenvalues(const Matrix& a) {
  if (!a.square()) throw ValidationError("eigenvalues: matrix is not square");
  for (double v : a.data())
    if (!std::isfinite(v)) throw NumericalError("eigenvalues: non-finite matrix entry");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  if (n <= 3) {
    const auto poly = characteristic_polynomial(a);
    return polynomial_roots(poly);
  }
  Matrix h = a;
  detail::hessenberg_reduce(h);
  std::vector<std::complex<double>> out;
  out.reserve(n);
  detail::hessenberg_qr(h, out, 60);
  return ComplexSpectrum(std::move(out));
}

/// True iff every root of the monic degree-2 or degree-3 polynomial
/// (descending coefficients) has strictly negative real part.
inline bool routh_hurwitz_stable(std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs[0] == 0.0)
    throw ValidationError("routh_hurwitz_stable: leading coefficient must be nonzero");
  std::vector<double> c(coeffs.begin(), coeffs.end());
  for (double& v : c) v /= coeffs[0];
  switch (c.size() - 1) {
    case 2: return c[1] > 0.0 && c[2] > 0.0;
    case 3: return c[1] > 0.0 && c[3] > 0.0 && c[1] * c[2] > c[3];
    default: throw ValidationError("routh_hurwitz_stable: unsupported degree");
  }
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending; eigenvectors are the matching columns.
struct SymmetricEigen {
  Vector values;
  Matrix vectors;
};

inline SymmetricEigen symmetric_eigen(const Matrix& m) {
  if (!m.square()) throw ValidationError("symmetric_eigen: matrix is not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix v = Matrix::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a(i, j) * a(i, j);
        if (j > i) off += a(i, j) * a(i, j);
      }
    if (off <= 1e-34 * total) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (sweep == 99) throw NumericalError("symmetric_eigen: Jacobi sweeps did not converge");
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{Vector(n), Matrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

}  // namespace lhg
