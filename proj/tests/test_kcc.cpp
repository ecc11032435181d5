#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using lhg::JacobiVerdict;
using lhg::Matrix;
using lhg::TangentState;
using lhg::Vector;

TEST(FirstInvariant, ZeroField) {
  EXPECT_EQ(lhg::first_invariant(oracle::zero_field(), {{1, 2, 3}, {1, 1, 1}}), (Vector{0, 0, 0}));
}

TEST(FirstInvariant, S2AtOnes) {
  EXPECT_EQ(lhg::first_invariant(oracle::s2(), {{1, 1, 1}, {0.5, 2, -1}}), (Vector{-10, -10, -10}));
}

TEST(FirstInvariant, RestVelocityGivesTransposedJacobianTerm) {
  const auto m = oracle::s3();
  const Vector x{0.7, 0.2, 1.3};
  const Vector fx = m.evaluate(x);
  const Vector jt = lhg::jacobian(m, x).transpose() * std::span<const double>(fx);
  const Vector e = lhg::first_invariant(m, {x, {0, 0, 0}});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(e[i], -jt[i], 1e-14 * (1 + std::abs(jt[i])));
}

TEST(FirstInvariant, BothFormsAgree) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 100; ++k) {
    const auto m = oracle::random_lv(rng, 3, 1.0);
    const TangentState s{oracle::random_positive_vector(rng, 3, 1.0), oracle::random_vector(rng, 3, -1, 1)};
    const Vector a = lhg::first_invariant(m, s), b = lhg::first_invariant_from_semispray(m, s);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-12);
  }
}

TEST(EMatrix, ZeroField) {
  EXPECT_EQ(lhg::e_matrix(oracle::zero_field(), {{1, 2, 3}, {3, 2, 1}}), Matrix(3, 3, 0.0));
}

TEST(EMatrix, SymmetricEquilibriumIsMinusJSquared) {
  const Matrix j = lhg::jacobian(oracle::s1(), Vector{1, 1, 1});
  EXPECT_EQ(j, (Matrix{{-2, -1, -1}, {-1, -2, -1}, {-1, -1, -2}}));
  EXPECT_EQ(lhg::e_matrix(oracle::s1(), {{1, 1, 1}, {0, 0, 0}}), -1.0 * (j * j));
}

TEST(EMatrix, S3MatchesAdaptedDerivativeOracle) {
  const TangentState s{{1, 1, 1}, {1, 0, 0}};
  const Matrix e = lhg::e_matrix(oracle::s3(), s);
  const Matrix fd = oracle::fd_e_matrix(oracle::s3(), s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(e(i, j), fd(i, j), 1e-5);
}

TEST(EMatrix, RandomStatesMatchOracle) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 100; ++k) {
    const auto m = oracle::random_lv(rng, 3, 2.0);
    const TangentState s{oracle::random_positive_vector(rng, 3, 2.0), oracle::random_vector(rng, 3, -2, 2)};
    const Matrix e = lhg::e_matrix(m, s);
    const Matrix fd = oracle::fd_e_matrix(m, s);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(e(i, j), fd(i, j), 1e-5);
  }
}

TEST(EMatrix, CustomFieldMatchesOracle) {
  const std::vector<std::string> src{"x1*x2 - x3^2", "x3*x1 + x2^2", "x1^2*x2 - x3"};
  const auto m = lhg::custom_field(src);
  const TangentState s{{0.4, -0.8, 1.1}, {0.3, 0.9, -0.5}};
  const Matrix e = lhg::e_matrix(m, s);
  const Matrix fd = oracle::fd_e_matrix(m, s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(e(i, j), fd(i, j), 1e-5);
}

TEST(Deviation, ZeroField) {
  EXPECT_EQ(lhg::deviation_matrix(oracle::zero_field(), {{1, 2, 3}, {1, 0, 1}}), Matrix(3, 3, 0.0));
}

TEST(Deviation, S1InteriorEquilibrium) {
  const auto r = lhg::jacobi_classify(oracle::s1(), {{1, 1, 1}, {0, 0, 0}});
  EXPECT_LT(oracle::multiset_distance(oracle::to_vector(r.spectrum), {-16.0, -1.0, -1.0}), 1e-7);
  EXPECT_LT(oracle::multiset_distance(oracle::brute_force_spectrum(r.p_matrix), {-16.0, -1.0, -1.0}), 1e-6);
  EXPECT_EQ(r.verdict, JacobiVerdict::jacobi_stable);
}

TEST(Deviation, AssembledFromTorsionsAndEMatrix) {
  const auto m = oracle::s3();
  const TangentState s{{0.5, 1.5, 1.0}, {0.2, -0.7, 1.9}};
  const auto r = lhg::d_torsions(m, s.x);
  Matrix expected = lhg::e_matrix(m, s);
  for (std::size_t k = 0; k < 3; ++k) expected = expected + s.y[k] * r[k];
  const Matrix p = lhg::deviation_matrix(m, s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(p(i, j), expected(i, j), 1e-12 * (1 + std::abs(expected(i, j))));
}

TEST(Deviation, LinearInVelocity) {
  std::mt19937_64 rng(16);
  for (int k = 0; k < 50; ++k) {
    const auto m = oracle::random_lv(rng, 3, 2.0);
    const Vector x = oracle::random_positive_vector(rng, 3, 2.0);
    const Vector y = oracle::random_vector(rng, 3, -2, 2);
    Vector y2 = y;
    for (double& v : y2) v *= 2.0;
    const Matrix p0 = lhg::deviation_matrix(m, {x, {0, 0, 0}});
    const Matrix d1 = lhg::deviation_matrix(m, {x, y}) - p0;
    const Matrix d2 = lhg::deviation_matrix(m, {x, y2}) - p0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(d2(i, j), 2.0 * d1(i, j), 1e-10 * (1 + std::abs(p0(i, j))));
  }
}

TEST(Deviation, SymmetricEquilibriumSpectrumIsMinusSquares) {
  // Symmetric A with the interior point (1,1,1) gives X = 0 and J = -A there.
  std::mt19937_64 rng(18);
  for (int k = 0; k < 30; ++k) {
    Matrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) a(i, j) = a(j, i) = oracle::positive(rng, 5.0);
    Vector b(3, 0.0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b[i] += a(i, j);
    const auto m = lhg::lotka_volterra(a, b);
    const Vector x{1, 1, 1};
    const auto lj = lhg::eigenvalues(lhg::jacobian(m, x));
    std::vector<std::complex<double>> expected;
    for (const auto& l : lj) expected.push_back(-l * l);
    const auto r = lhg::jacobi_classify(m, {x, {0, 0, 0}});
    EXPECT_LT(oracle::multiset_distance(oracle::to_vector(r.spectrum), expected), 1e-7 * (1 + a.norm_inf() * a.norm_inf()));
  }
}

TEST(Verdict, ZeroFieldIsMarginal) {
  EXPECT_EQ(lhg::jacobi_classify(oracle::zero_field(), {{1, 1, 1}, {0, 0, 0}}).verdict, JacobiVerdict::marginal);
}

TEST(Verdict, MixedSignLinearField) {
  const std::vector<std::string> src{"x1", "-x2", "-x3"};
  const auto r = lhg::jacobi_classify(lhg::custom_field(src), {{1, 1, 1}, {0, 0, 0}});
  EXPECT_EQ(r.p_matrix, -1.0 * Matrix::identity(3));
  EXPECT_EQ(r.verdict, JacobiVerdict::jacobi_stable);
}

TEST(Verdict, SingleComponentAgreesWithBruteForce) {
  const std::vector<std::string> src{"x1", "0", "0"};
  const auto r = lhg::jacobi_classify(lhg::custom_field(src), {{1, 1, 1}, {0, 0, 0}});
  const auto bf = oracle::brute_force_spectrum(r.p_matrix);
  double max_re = -HUGE_VAL;
  for (const auto& l : bf) max_re = std::max(max_re, l.real());
  EXPECT_NEAR(r.spectrum.max_real(), max_re, 1e-7);
  // P = diag(-1, 0, 0): the zero eigenvalues sit inside the band.
  EXPECT_EQ(r.verdict, JacobiVerdict::marginal);
}

TEST(Verdict, Deterministic) {
  const auto m = oracle::s3();
  const TangentState s{{0.5, 1.5, 1.0}, {0.1, 0.2, 0.3}};
  const auto a = lhg::jacobi_classify(m, s), b = lhg::jacobi_classify(m, s);
  EXPECT_EQ(a.p_matrix, b.p_matrix);
  EXPECT_EQ(a.verdict, b.verdict);
}

TEST(Verdict, BandScalesWithMatrix) {
  EXPECT_DOUBLE_EQ(lhg::jacobi_marginal_band(Matrix(3, 3, 0.0)), 1e-9);
  EXPECT_DOUBLE_EQ(lhg::jacobi_marginal_band(Matrix{{1, -2}, {3, 0}}), 4e-9);
}
