#include "ubtr/prox.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ubtr;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST(EvalH, Examples) {
  EXPECT_EQ(eval_h(RegularizerSpec::zero(), vec({3, -4})), 0.0);
  EXPECT_EQ(eval_h(RegularizerSpec::l1(2.0), vec({3, -4})), 14.0);
  EXPECT_EQ(eval_h(RegularizerSpec::l1(0.0), vec({1e300, -7})), 0.0);
}

TEST(Prox, InteriorProjectionIsIdentity) {
  const Vector s = prox_separable(RegularizerSpec::zero(), vec({-0.5}), 1.0, vec({0}), BoxBall::unbounded(1, 1.0));
  EXPECT_EQ(s[0], -0.5);
}

TEST(Prox, ProjectsOntoBall) {
  const Vector s = prox_separable(RegularizerSpec::zero(), vec({-2}), 1.0, vec({0}), BoxBall::unbounded(1, 1.0));
  EXPECT_EQ(s[0], -1.0);
}

TEST(Prox, SoftThreshold) {
  const Vector s = prox_separable(RegularizerSpec::l1(1.0), vec({0.8}), 0.5, vec({0}), BoxBall::unbounded(1));
  EXPECT_NEAR(s[0], 0.3, 1e-15);
  const auto ref = oracle::grid_prox(0.8, 0.5, 1.0, 0.0, -2.0, 2.0);
  EXPECT_NEAR(s[0], ref.arg, 1e-6);
}

TEST(Prox, ZeroUnboundedIsIdentity) {
  const Vector q = vec({1e-3, -7.5, 42.0});
  EXPECT_EQ(prox_separable(RegularizerSpec::zero(), q, 3.0, Vector::Zero(3), BoxBall::unbounded(3)), q);
}

TEST(Prox, RejectsBadInput) {
  const BoxBall r = BoxBall::unbounded(1, 1.0);
  EXPECT_THROW(prox_separable(RegularizerSpec::zero(), vec({1}), 0.0, vec({0}), r), InputError);
  EXPECT_THROW(prox_separable(RegularizerSpec::zero(), vec({1}), -1.0, vec({0}), r), InputError);
  EXPECT_THROW(prox_separable(RegularizerSpec::zero(), vec({std::nan("")}), 1.0, vec({0}), r), InputError);
  BoxBall empty{vec({0.5}), vec({0.25}), 1.0};  // x above its upper bound
  EXPECT_THROW(prox_separable(RegularizerSpec::zero(), vec({0}), 1.0, vec({0}), empty), InputError);
}

TEST(Prox, ShiftedThresholdLandsOnKink) {
  // minimizer of 0.5 (s - 0.2)^2 + |0.5 + s| sits at s = -0.5 (x + s = 0)
  Vector s = prox_separable(RegularizerSpec::l1(1.0), vec({0.2}), 1.0, vec({0.5}), BoxBall::unbounded(1));
  EXPECT_EQ(s[0], -0.5);
  // with x = 1 the threshold is exceeded: s = q - nu lambda
  s = prox_separable(RegularizerSpec::l1(1.0), vec({0.2}), 1.0, vec({1.0}), BoxBall::unbounded(1));
  EXPECT_DOUBLE_EQ(s[0], -0.8);
}

TEST(ProxProperty, FeasibleAndGridOptimalUpTo3D) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.05, 2.0);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = dim(rng);
    const RegularizerSpec spec = trial % 2 ? RegularizerSpec::l1(pos(rng)) : RegularizerSpec::zero();
    const double nu = pos(rng);
    Vector q(n), x(n), lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      q[i] = u(rng);
      x[i] = u(rng);
      lo[i] = x[i] - pos(rng);
      hi[i] = x[i] + pos(rng);
    }
    BoxBall region{lo - x, hi - x, pos(rng)};
    const Vector s = prox_separable(spec, q, nu, x, region);
    double total = 0.0, ref_total = 0.0;
    for (int i = 0; i < n; ++i) {
      ASSERT_LE(std::abs(s[i]), region.radius);
      ASSERT_GE(x[i] + s[i], lo[i] - 1e-15);
      ASSERT_LE(x[i] + s[i], hi[i] + 1e-15);
      const double a = std::max(lo[i] - x[i], -region.radius);
      const double b = std::min(hi[i] - x[i], region.radius);
      const double lam = spec.effective_weight();
      const auto ref = oracle::grid_prox(q[i], nu, lam, x[i], a, b);
      total += oracle::prox_objective(s[i], q[i], nu, lam, x[i]);
      ref_total += ref.value;
    }
    EXPECT_LE(total, ref_total + 1e-8) << "trial " << trial;
  }
}
