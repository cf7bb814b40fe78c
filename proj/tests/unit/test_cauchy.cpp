#include "ubtr/cauchy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ubtr;

namespace {

Problem linear_1d(RegularizerSpec h = RegularizerSpec::zero()) {
  return make_unconstrained([](const Vector&) { return 0.0; },
                            [](const Vector& x) { return Vector::Zero(x.size()); }, h, Vector::Zero(1));
}

}  // namespace

TEST(SelectNu, Examples) {
  EXPECT_EQ(select_nu(1.0, 0.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(select_nu(1.0, 1.0, 1.0), 1.0 / 3.0);
  const double nu = select_nu(1.0, 1.0, 1e16);
  // exact value 1 - 2e-16 is within one rounding of 1.0
  EXPECT_LE(std::abs(nu - (1.0 - 2e-16)), 3e-16);
  EXPECT_NEAR(nu_norm_margin(1.0, 1.0, 1e16), 2e-16, 1e-30);
}

TEST(SelectNu, RejectsNonfinite) {
  EXPECT_THROW(select_nu(kInf, 1.0, 1.0), InputError);
  EXPECT_THROW(select_nu(1.0, std::nan(""), 1.0), InputError);
  EXPECT_THROW(select_nu(0.0, 1.0, 1.0), InputError);
}

TEST(SelectNu, NormProductBelowCap) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> e(-6.0, 6.0);
  const double delta_max = 1e3;
  for (int i = 0; i < 2000; ++i) {
    const double alpha = std::pow(10.0, e(rng));
    const double b = std::pow(10.0, e(rng));
    const double delta = delta_max * std::pow(10.0, -std::abs(e(rng)));
    const double nu = select_nu(delta, b, alpha);
    EXPECT_LE(nu * b, 1.0 / (1.0 + 1.0 / (alpha * delta_max)) * (1 + 1e-15));
    const double margin = nu_norm_margin(delta, b, alpha);
    EXPECT_GT(margin, 0.0);
    EXPECT_NEAR(margin, 1.0 - nu * b, 1e-12);
  }
}

TEST(SelectNu, MarginPositiveWhenProductRoundsToOne) {
  // fl(nu * b) == 1 here, but the exact margin is about 1e-19.
  const double nu = select_nu(1e3, 1.3, 1e16);
  EXPECT_EQ(nu * 1.3, 1.0);
  const double margin = nu_norm_margin(1e3, 1.3, 1e16);
  EXPECT_GT(margin, 0.0);
  EXPECT_NEAR(margin, (1.0 + 1.0 / 1.3) / 1e19, 1e-30);
}

TEST(Cauchy, StationaryPoint) {
  const auto r = cauchy_step(linear_1d(), Vector::Zero(1), Vector::Zero(1), 0.7, 2.0);
  EXPECT_EQ(r.s1[0], 0.0);
  EXPECT_EQ(r.xi_cp, 0.0);
  EXPECT_EQ(r.criticality, 0.0);
}

TEST(Cauchy, SmoothInactiveRegion) {
  Vector g(1);
  g << -0.6;
  const auto r = cauchy_step(linear_1d(), Vector::Zero(1), g, 0.5, 10.0);
  EXPECT_DOUBLE_EQ(r.xi_cp, 0.5 * 0.36);
  EXPECT_NEAR(r.criticality, 0.6, 1e-15);
}

TEST(Cauchy, L1ThresholdKillsStep) {
  Vector g(1);
  g << 0.3;
  const auto r = cauchy_step(linear_1d(RegularizerSpec::l1(1.0)), Vector::Zero(1), g, 1.0, kInf);
  EXPECT_EQ(r.s1[0], 0.0);
  EXPECT_EQ(r.xi_cp, 0.0);
}

TEST(CauchyProperty, SufficientDecreaseAndIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 3.0);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 3;
    Problem p = linear_1d(t % 2 ? RegularizerSpec::l1(pos(rng)) : RegularizerSpec::zero());
    p.x0 = Vector::Zero(n);
    p.lower = Vector::Constant(n, -pos(rng));
    p.upper = Vector::Constant(n, pos(rng));
    Vector g(n);
    for (int i = 0; i < n; ++i) g[i] = u(rng);
    const double nu = pos(rng);
    const auto r = cauchy_step(p, p.x0, g, nu, pos(rng));
    EXPECT_GE(r.xi_cp, 0.5 / nu * r.s1.squaredNorm() - 1e-12);
    EXPECT_NEAR(r.criticality * r.criticality, r.xi_cp / nu, 1e-14 * std::max(1.0, r.xi_cp / nu));
  }
}

TEST(CauchyProperty, ConstantShiftOfFIsIrrelevant) {
  Problem a = linear_1d(RegularizerSpec::l1(0.2));
  Problem b = a;
  b.f = [](const Vector&) { return 1e6; };
  Vector g(1);
  g << -0.9;
  const auto ra = cauchy_step(a, Vector::Zero(1), g, 0.8, 1.0);
  const auto rb = cauchy_step(b, Vector::Zero(1), g, 0.8, 1.0);
  EXPECT_EQ(ra.xi_cp, rb.xi_cp);
  EXPECT_EQ(ra.s1, rb.s1);
}

TEST(CauchyProperty, SmoothCriticalityEqualsGradNorm) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> e(-3.0, 3.0);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 4;
    Problem p = linear_1d();
    p.x0 = Vector::Zero(n);
    p.lower = Vector::Constant(n, -kInf);
    p.upper = Vector::Constant(n, kInf);
    Vector g(n);
    for (int i = 0; i < n; ++i) g[i] = u(rng) * std::pow(10.0, e(rng));
    const double alpha = std::pow(10.0, e(rng));
    const double b = std::pow(10.0, e(rng));
    // radius large enough that nu |g_i| < delta
    const double delta = 10.0 * g.lpNorm<Eigen::Infinity>() * (1.0 / b + alpha) + 1.0;
    const double nu = select_nu(delta, b, alpha);
    const auto r = cauchy_step(p, p.x0, g, nu, delta);
    EXPECT_NEAR(r.criticality, g.norm(), 1e-10 * std::max(1.0, g.norm()));
  }
}
