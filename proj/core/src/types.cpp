#include "ubtr/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ubtr {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

void RegularizerSpec::validate() const {
  if (kind == RegularizerKind::L1) {
    require(std::isfinite(weight) && weight >= 0.0, "L1 weight must be finite and >= 0");
  }
}

void Problem::validate() const {
  require(static_cast<bool>(f), "problem has no objective oracle");
  require(static_cast<bool>(grad), "problem has no gradient oracle");
  require(x0.size() > 0, "problem dimension must be positive");
  require(lower.size() == x0.size() && upper.size() == x0.size(),
          "bound vectors must match the dimension of x0");
  regularizer.validate();
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i]) || lower[i] > upper[i]) {
      std::ostringstream msg;
      msg << "invalid bounds in coordinate " << i << ": [" << lower[i] << ", " << upper[i] << "]";
      throw InputError(msg.str());
    }
  }
}

bool Problem::feasible(const Vector& x) const {
  if (x.size() != dim()) return false;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (!std::isfinite(x[i]) || x[i] < lower[i] || x[i] > upper[i]) return false;
  }
  return true;
}

bool Problem::unconstrained() const {
  return (lower.array() == -kInf).all() && (upper.array() == kInf).all();
}

Problem make_unconstrained(ValueOracle f, GradientOracle grad, RegularizerSpec h, Vector x0) {
  Problem p;
  p.f = std::move(f);
  p.grad = std::move(grad);
  p.regularizer = h;
  p.lower = Vector::Constant(x0.size(), -kInf);
  p.upper = Vector::Constant(x0.size(), kInf);
  p.x0 = std::move(x0);
  return p;
}

void TRParams::validate() const {
  require(0.0 < eta1 && eta1 <= eta2 && eta2 < 1.0, "need 0 < eta1 <= eta2 < 1");
  require(gamma3 > 0.0 && 1.0 / gamma3 <= gamma1, "need 0 < 1/gamma3 <= gamma1");
  require(gamma1 <= gamma2 && gamma2 < 1.0, "need gamma1 <= gamma2 < 1");
  require(1.0 < gamma3 && gamma3 <= gamma4, "need 1 < gamma3 <= gamma4");
  require(delta0 > 0.0 && delta_max > delta0, "need delta_max > delta0 > 0");
  require(std::isfinite(delta_max), "delta_max must be finite");
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive and finite");
  require(beta >= 1.0 && std::isfinite(beta), "beta must be >= 1 and finite");
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
  require(max_iter > 0, "max_iter must be positive");
}

BoxBall BoxBall::around(const Problem& problem, const Vector& x, double radius) {
  return {problem.lower - x, problem.upper - x, radius};
}

BoxBall BoxBall::unbounded(Eigen::Index n, double radius) {
  return {Vector::Constant(n, -kInf), Vector::Constant(n, kInf), radius};
}

double BoxBall::lo(Eigen::Index i) const { return std::max(lower_shift[i], -radius); }
double BoxBall::hi(Eigen::Index i) const { return std::min(upper_shift[i], radius); }

}  // namespace ubtr
