#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"

using lhg::JacobiVerdict;
using lhg::LyapunovVerdict;
using lhg::Matrix;
using lhg::Vector;

namespace {

double max_abs_diff(const Vector& a, const Vector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

const lhg::Equilibrium* find(const lhg::EquilibriumSet& set, const Vector& x) {
  for (const auto& e : set.equilibria)
    if (max_abs_diff(e.x, x) < 1e-12) return &e;
  return nullptr;
}

}  // namespace

TEST(Equilibria, S1HasEightWithExpectedPoints) {
  const auto set = lhg::equilibria(oracle::s1());
  EXPECT_EQ(set.equilibria.size(), 8u);
  EXPECT_TRUE(set.singular_supports.empty());
  EXPECT_NE(find(set, {0, 0, 0}), nullptr);
  EXPECT_NE(find(set, {2, 0, 0}), nullptr);
  EXPECT_NE(find(set, {4.0 / 3, 4.0 / 3, 0}), nullptr);
  const auto* interior = find(set, {1, 1, 1});
  ASSERT_NE(interior, nullptr);
  EXPECT_EQ(interior->support, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(interior->lyapunov, LyapunovVerdict::stable);
  EXPECT_EQ(interior->jacobi, JacobiVerdict::jacobi_stable);
  EXPECT_LT(oracle::multiset_distance(oracle::to_vector(interior->jacobian_spectrum), {-4.0, -1.0, -1.0}), 1e-9);
  EXPECT_LT(oracle::multiset_distance(oracle::to_vector(interior->deviation_spectrum), {-16.0, -1.0, -1.0}), 1e-7);
}

TEST(Equilibria, AllAreZerosOfTheField) {
  const auto m = oracle::s3();
  const auto set = lhg::equilibria(m);
  for (const auto& e : set.equilibria) {
    EXPECT_LE(lhg::norm_inf(m.evaluate(e.x)), 1e-9 * (1 + lhg::norm_inf(e.x)));
    for (std::size_t i = 0; i < 3; ++i) {
      const bool in = std::find(e.support.begin(), e.support.end(), i) != e.support.end();
      if (in) EXPECT_GT(e.x[i], 0.0);
      else EXPECT_EQ(e.x[i], 0.0);
    }
  }
}

TEST(Equilibria, OriginIsUnstable) {
  const auto* origin = find(lhg::equilibria(oracle::s1()), {0, 0, 0});
  ASSERT_NE(origin, nullptr);
  EXPECT_EQ(origin->lyapunov, LyapunovVerdict::unstable);
}

TEST(Equilibria, SingularSupportsAreReported) {
  const auto set = lhg::equilibria(oracle::s2());
  // Every support with two or more species is rank-deficient for A = ones.
  EXPECT_EQ(set.singular_supports.size(), 4u);
  EXPECT_EQ(set.equilibria.size(), 4u);
}

TEST(Equilibria, CustomFieldRejected) {
  EXPECT_THROW(lhg::equilibria(oracle::zero_field()), lhg::ValidationError);
}

TEST(Flow, EquilibriumStartIsConstant) {
  const auto traj = lhg::integrate_flow(oracle::s1(), {1, 1, 1}, 0.01, 1000);
  ASSERT_EQ(traj.samples.size(), 1001u);
  for (const auto& s : traj.samples) EXPECT_LT(max_abs_diff(s.x, {1, 1, 1}), 1e-12);
  EXPECT_FALSE(traj.truncated);
}

TEST(Flow, ConvergesToInteriorEquilibrium) {
  const auto traj = lhg::integrate_flow(oracle::s1(), {0.5, 0.5, 0.5}, 0.01, 3000);
  EXPECT_LT(max_abs_diff(traj.samples.back().x, {1, 1, 1}), 1e-6);
  EXPECT_DOUBLE_EQ(traj.samples.back().t, 30.0);
}

TEST(Flow, MatchesLogisticReduction) {
  // Symmetric data: s' = s (4 - 4 s), s(0) = 1/2, so s(t) = 1 / (1 + e^{-4t}).
  const auto traj = lhg::integrate_flow(oracle::s1(), {0.5, 0.5, 0.5}, 0.01, 200);
  for (const auto& s : traj.samples) {
    const double exact = 1.0 / (1.0 + std::exp(-4.0 * s.t));
    for (double v : s.x) EXPECT_NEAR(v, exact, 1e-8);
  }
}

TEST(Flow, ZeroFieldIsConstant) {
  const auto traj = lhg::integrate_flow(oracle::zero_field(), {3, -1, 2}, 0.1, 50);
  for (const auto& s : traj.samples) EXPECT_EQ(s.x, (Vector{3, -1, 2}));
}

TEST(Flow, PositivityIsPreserved) {
  std::mt19937_64 rng(40);
  for (int k = 0; k < 20; ++k) {
    const auto m = oracle::random_lv(rng, 3, 3.0);
    const auto traj = lhg::integrate_flow(m, oracle::random_positive_vector(rng, 3, 2.0), 0.01, 1000);
    for (const auto& s : traj.samples) EXPECT_GT(*std::min_element(s.x.begin(), s.x.end()), -1e-9);
  }
}

TEST(Flow, DivergenceSetsTruncationFlag) {
  const std::vector<std::string> src{"x1^2", "0"};
  const auto traj = lhg::integrate_flow(lhg::custom_field(src), {1, 0}, 0.01, 1000);
  EXPECT_TRUE(traj.truncated);
  EXPECT_LT(traj.samples.size(), 1001u);
  EXPECT_GT(traj.truncated_at, 0.9);
  EXPECT_LT(traj.truncated_at, 1.1);
}

TEST(Flow, RejectsBadArguments) {
  EXPECT_THROW(lhg::integrate_flow(oracle::s1(), {1, 1, 1}, 0.01, 0), lhg::ValidationError);
  EXPECT_THROW(lhg::integrate_flow(oracle::s1(), {1, 1, 1}, 0.0, 10), lhg::ValidationError);
  EXPECT_THROW(lhg::integrate_flow(oracle::s1(), {1, 1}, 0.01, 10), lhg::ValidationError);
}

TEST(EulerLagrange, TracksFlowOverShortHorizon) {
  // Horizons are short because the flow manifold is repelling (see below);
  // S3 has the fastest expansion rate and needs a finer step.
  struct Case {
    lhg::VectorFieldModel m;
    double h;
    long long steps;
  };
  const std::vector<Case> cases{{oracle::s1(), 0.01, 100}, {oracle::s2(), 0.01, 100}, {oracle::s3(), 0.001, 250}};
  for (const auto& [m, h, steps] : cases) {
    const Vector x0{0.5, 0.5, 0.5};
    const auto flow = lhg::integrate_flow(m, x0, h, steps);
    const auto el = lhg::integrate_euler_lagrange(m, x0, m.evaluate(x0), h, steps);
    ASSERT_EQ(el.samples.size(), flow.samples.size());
    EXPECT_LT(max_abs_diff(el.samples.back().x, flow.samples.back().x), 1e-6) << steps;
    EXPECT_LT(max_abs_diff(el.samples.back().y, m.evaluate(el.samples.back().x)), 1e-6) << steps;
  }
}

TEST(EulerLagrange, OffManifoldDeviationGrowsNearStableEquilibrium) {
  // z = y - X(x) obeys z' = -J^t z, so near a stable equilibrium the flow
  // manifold y = X(x) repels: a small z grows like e^{4t} for S1.
  const auto m = oracle::s1();
  const Vector x0{1, 1, 1};
  const Vector y0{1e-10, 0, 0};
  const auto el = lhg::integrate_euler_lagrange(m, x0, y0, 0.01, 300);
  const auto& last = el.samples.back();
  const double z = max_abs_diff(last.y, m.evaluate(last.x));
  EXPECT_GT(z, 1e-10 * std::exp(4.0 * 3.0) * 0.1);
}

TEST(EulerLagrange, RestAtEquilibriumIsConstant) {
  const auto el = lhg::integrate_euler_lagrange(oracle::s1(), {1, 1, 1}, {0, 0, 0}, 0.01, 500);
  for (const auto& s : el.samples) {
    EXPECT_EQ(s.x, (Vector{1, 1, 1}));
    EXPECT_EQ(s.y, (Vector{0, 0, 0}));
  }
}

TEST(EulerLagrange, ZeroFieldMovesInStraightLine) {
  const Vector x0{1, 2, 3};
  const auto el = lhg::integrate_euler_lagrange(oracle::zero_field(), x0, {1, 0, 0}, 0.1, 20);
  for (const auto& s : el.samples) {
    EXPECT_NEAR(s.x[0], 1.0 + s.t, 1e-12);
    EXPECT_EQ(s.x[1], 2.0);
    EXPECT_EQ(s.x[2], 3.0);
  }
}

TEST(Residual, SecondOrderInStep) {
  const auto m = oracle::s1();
  const Vector x0{0.5, 0.5, 0.5};
  const double r1 = lhg::el_residual(m, lhg::integrate_flow(m, x0, 0.01, 1000));
  const double r2 = lhg::el_residual(m, lhg::integrate_flow(m, x0, 0.005, 2000));
  const double order = std::log2(r1 / r2);
  EXPECT_GE(order, 1.5);
  EXPECT_LE(order, 2.5);
  EXPECT_NEAR(r1 / r2, 4.0, 1.0);
}

TEST(Residual, VanishesOnConstantTrajectories) {
  EXPECT_LT(lhg::el_residual(oracle::s1(), lhg::integrate_flow(oracle::s1(), {1, 1, 1}, 0.01, 100)), 1e-12);
  EXPECT_LT(lhg::el_residual(oracle::zero_field(), lhg::integrate_flow(oracle::zero_field(), {1, 2, 3}, 0.01, 100)),
            1e-12);
}

TEST(Residual, NeedsThreeSamples) {
  EXPECT_THROW(lhg::el_residual(oracle::s1(), lhg::integrate_flow(oracle::s1(), {1, 1, 1}, 0.01, 1)),
               lhg::ValidationError);
}

TEST(Residual, ProfileIsEmptyAtEnds) {
  const auto p = lhg::el_residual_profile(oracle::s1(), lhg::integrate_flow(oracle::s1(), {0.5, 1, 2}, 0.01, 10));
  ASSERT_EQ(p.size(), 11u);
  EXPECT_FALSE(p.front().has_value());
  EXPECT_FALSE(p.back().has_value());
  for (std::size_t k = 1; k + 1 < p.size(); ++k) EXPECT_TRUE(p[k].has_value());
}
