#include "ubtr/adversary.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace ubtr;

namespace {

const double kEpsGrid[] = {1.0 / 3.0, 1.0 / 5.0, 1.0 / 10.0, 1.0 / 20.0};
const double kPGrid[] = {0.0, 0.1, 0.3, 0.5};

// One-sided difference quotient of a piece, extrapolated once (Richardson).
// Built from increments so the quotient is not swamped by f's magnitude.
double left_slope(const HermitePiece& pc, double h) {
  const double s = pc.length;
  // divide by the spacing actually represented, not the nominal h
  const double t1 = s - h, t2 = s - h / 2;
  const double d1 = pc.increment(t1, s) / (s - t1);
  const double d2 = pc.increment(t2, s) / (s - t2);
  return 2.0 * d2 - d1;
}

double right_slope(const HermitePiece& pc, double h) {
  const double d1 = pc.increment(0.0, h) / h;
  const double d2 = pc.increment(0.0, h / 2) / (h / 2);
  return 2.0 * d2 - d1;
}

}  // namespace

TEST(KEps, Examples) {
  EXPECT_EQ(k_eps(0.1, 0.1), 166);
  EXPECT_EQ(k_eps(0.05, 0.1), 778);
  EXPECT_EQ(k_eps(0.5, 0.0), 4);
  EXPECT_EQ(k_eps(1.0 / 3.0, 0.1), 11);
  EXPECT_EQ(k_eps(0.1, 0.0), 100);  // 0.1^-2 rounds to 100.00000000000001
}

TEST(KEps, Domain) {
  EXPECT_THROW(k_eps(0.0, 0.1), InputError);
  EXPECT_THROW(k_eps(0.6, 0.1), InputError);
  EXPECT_THROW(k_eps(0.1, 1.0), InputError);
  EXPECT_THROW(k_eps(0.1, -0.1), InputError);
  EXPECT_THROW(k_eps(1e-6, 0.9), InputError);  // far beyond the supported size
}

TEST(Instance, ThirdExample) {
  const auto inst = build_instance(1.0 / 3.0, 0.1);
  EXPECT_EQ(inst.k_eps(), 11);
  EXPECT_NEAR(inst.f(0), 8.0 / 9.0 + 4.0 / 0.9, 1e-15);
  EXPECT_NEAR(inst.f(0), 5.3333, 1e-4);
  EXPECT_DOUBLE_EQ(inst.g(0), -2.0 / 3.0);
  EXPECT_DOUBLE_EQ(inst.s(0), 2.0 / 3.0);
  EXPECT_EQ(inst.f(inst.k_eps() + 1), inst.f(inst.k_eps()));
  EXPECT_EQ(inst.g(inst.k_eps() + 1), inst.g(inst.k_eps()));
  EXPECT_EQ(inst.x(-1), -1.0);
  EXPECT_EQ(inst.g(-1), 0.0);
  EXPECT_EQ(inst.s(-1), 1.0);
  EXPECT_EQ(inst.f(-1), inst.f(0));
}

TEST(Instance, RejectsSmallBeta) {
  InstanceOptions o;
  o.alpha = 1.0;
  o.beta = 2.5;
  try {
    build_instance(0.1, 0.1, o);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("2/alpha + 1 = 3"), std::string::npos) << e.what();
  }
  o.beta = 3.0;
  EXPECT_NO_THROW(build_instance(0.1, 0.1, o));
}

TEST(Instance, Evaluation) {
  const auto inst = build_instance(1.0 / 3.0, 0.1);
  EXPECT_EQ(eval_f(inst, -5.0), inst.f(0));
  EXPECT_EQ(eval_fprime(inst, -5.0), 0.0);
  EXPECT_EQ(eval_fprime(inst, inst.x(-1)), 0.0);
  const double far = inst.x(inst.k_eps() + 1) + 1.0;
  EXPECT_EQ(eval_f(inst, far), inst.f(inst.k_eps()));
  EXPECT_EQ(eval_fprime(inst, far), 0.0);
  for (int k = -1; k <= inst.k_eps() + 1; ++k) {
    EXPECT_NEAR(eval_f(inst, inst.x(k)), inst.f(k), 1e-12);
    if (k >= 0) EXPECT_NEAR(eval_fprime(inst, inst.x(k)), inst.g(k), 1e-12);
  }
}

TEST(Instance, Locate) {
  const auto inst = build_instance(0.2, 0.3);
  EXPECT_EQ(inst.locate(-1.0), -2);
  EXPECT_EQ(inst.locate(-0.5), -1);
  EXPECT_EQ(inst.locate(0.0), -1);  // pieces are (x_k, x_{k+1}]
  EXPECT_EQ(inst.locate(inst.x(0) + inst.s(0) / 2), 0);
  EXPECT_EQ(inst.locate(inst.x(inst.k_eps() + 1)), inst.k_eps());
  EXPECT_EQ(inst.locate(inst.x(inst.k_eps() + 1) + 1e-9), inst.k_eps() + 1);
}

TEST(InstanceProperty, Sweep) {
  for (double eps : kEpsGrid) {
    for (double p : kPGrid) {
      SCOPED_TRACE(::testing::Message() << "eps=" << eps << " p=" << p);
      const auto inst = build_instance(eps, p);
      const int ke = inst.k_eps();
      for (const auto& issue : audit_instance(inst)) ADD_FAILURE() << issue;

      EXPECT_EQ(inst.x(0), 0.0);
      EXPECT_EQ(inst.B(0), 1.0);
      EXPECT_EQ(inst.delta(0), 1.0);
      EXPECT_DOUBLE_EQ(inst.f(0), 8 * eps * eps + 4 / (1 - p));
      for (int k = 0; k <= ke; ++k) {
        EXPECT_DOUBLE_EQ(inst.w(k), static_cast<double>(ke - k) / ke);
        EXPECT_EQ(inst.g(k), -eps * (1 + inst.w(k)));
        EXPECT_GT(inst.s(k), 0.0);
        EXPECT_EQ(inst.s(k), -inst.g(k) / inst.B(k));
        EXPECT_GE(inst.delta(k), 1.0);
        EXPECT_LE(std::abs(inst.g(k)), 2 * eps);
        if (k >= 1) {
          EXPECT_EQ(inst.B(k), std::pow(static_cast<double>(k), p));
          EXPECT_EQ(inst.x(k), inst.x(k - 1) + inst.s(k - 1));
          EXPECT_EQ(inst.f(k), inst.f(k - 1) + inst.g(k - 1) * inst.s(k - 1));
        }
        // criticality identity: nu^-1/2 (g * nu g)^1/2 = |g|
        const double crit = std::sqrt(inst.g(k) * inst.nu(k) * inst.g(k) / inst.nu(k));
        EXPECT_NEAR(crit, std::abs(inst.g(k)), 4e-16);
      }
      EXPECT_EQ(inst.g(ke), -eps);
      for (int k = -1; k < ke; ++k) EXPECT_EQ(inst.f(k + 1) - (inst.f(k) + inst.g(k) * inst.s(k)), 0.0);
    }
  }
}

TEST(InstanceProperty, HermiteCoefficientsMatchOracles) {
  for (double eps : kEpsGrid) {
    for (double p : kPGrid) {
      const auto inst = build_instance(eps, p);
      for (int k = -1; k <= inst.k_eps(); ++k) {
        SCOPED_TRACE(::testing::Message() << "eps=" << eps << " p=" << p << " k=" << k);
        const HermitePiece& pc = inst.piece(k);
        const double s = inst.s(k);
        EXPECT_EQ(pc.c0, inst.f(k));
        EXPECT_EQ(pc.c1, inst.g(k));
        // [s^2 s^3; 2s 3s^2] (c2, c3) = (r1, r2)
        const double r1 = inst.f(k + 1) - (inst.f(k) + inst.g(k) * s);
        const double r2 = inst.g(k + 1) - inst.g(k);
        double c2 = 0, c3 = 0;
        oracle::solve2x2(s * s, s * s * s, 2 * s, 3 * s * s, r1, r2, c2, c3);
        const double scale2 = std::max(std::abs(c2), 1e-300);
        const double scale3 = std::max(std::abs(c3), 1e-300);
        if (c2 != 0.0 || pc.c2 != 0.0) EXPECT_LE(std::abs(pc.c2 - c2) / scale2, 1e-12);
        if (c3 != 0.0 || pc.c3 != 0.0) EXPECT_LE(std::abs(pc.c3 - c3) / scale3, 1e-12);

        const double mid = oracle::hermite_basis(inst.f(k), inst.g(k), inst.f(k + 1), inst.g(k + 1), s, s / 2);
        EXPECT_NEAR(eval_f(inst, inst.x(k) + s / 2), mid, 1e-12);
        EXPECT_NEAR(pc.value(s), inst.f(k + 1), 1e-12);
        EXPECT_NEAR(pc.derivative(s), inst.g(k + 1), 1e-12);
      }
    }
  }
}

TEST(InstanceProperty, C1AtInteriorKnots) {
  for (double eps : kEpsGrid) {
    for (double p : kPGrid) {
      const auto inst = build_instance(eps, p);
      for (int k = 0; k <= inst.k_eps(); ++k) {
        const double left = left_slope(inst.piece(k - 1), 1e-6 * inst.s(k - 1));
        const double right = right_slope(inst.piece(k), 1e-6 * inst.s(k));
        EXPECT_NEAR(left, right, 1e-10) << "eps=" << eps << " p=" << p << " k=" << k;
        EXPECT_NEAR(right, inst.g(k), 1e-10);
      }
    }
  }
}

TEST(InstanceProperty, ContinuityOfValues) {
  const auto inst = build_instance(0.1, 0.3);
  for (int k = 0; k <= inst.k_eps() + 1; ++k) {
    const double xk = inst.x(k);
    const double below = std::nextafter(xk, -kInf);
    const double above = std::nextafter(xk, kInf);
    EXPECT_NEAR(eval_f(inst, below), inst.f(k), 1e-12);
    if (k <= inst.k_eps()) EXPECT_NEAR(eval_f(inst, above), inst.f(k), 1e-12);
  }
}

TEST(Instance, CsvLayout) {
  const auto inst = build_instance(0.5, 0.0);
  std::ostringstream out;
  write_instance_csv(inst, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "k,x_k,f_k,g_k,s_k,B_k,c0,c1,c2,c3");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, inst.k_eps() + 2);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}
