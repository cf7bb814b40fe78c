#include "ubtr/hessian.hpp"

#include "ubtr/types.hpp"

#include <algorithm>
#include <cmath>

namespace ubtr {

double GrowthConstants::cap(int sigma) const {
  return std::max(mu1, mu2 * std::pow(static_cast<double>(sigma), p));
}

HessianPolicy::HessianPolicy(Kind kind, double a, double b, double p)
    : kind_(kind), a_(a), b_(b), p_(p) {}

HessianPolicy HessianPolicy::constant(double b) {
  if (!(b >= 0.0) || !std::isfinite(b)) throw InputError("constant Hessian norm must be finite and >= 0");
  return {Kind::Constant, b, b, 0.0};
}

HessianPolicy HessianPolicy::power_growth(double mu1, double mu2, double p) {
  if (!(mu1 > 0.0) || !(mu2 > 0.0)) throw InputError("power growth needs mu1 > 0 and mu2 > 0");
  if (!(p >= 0.0 && p < 1.0)) throw InputError("growth exponent p must lie in [0, 1)");
  return {Kind::PowerGrowth, mu1, mu2, p};
}

HessianPolicy HessianPolicy::adversarial_power(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw InputError("growth exponent p must lie in [0, 1)");
  return {Kind::AdversarialPower, 1.0, 1.0, p};
}

std::string HessianPolicy::name() const {
  switch (kind_) {
    case Kind::Constant: return "constant";
    case Kind::PowerGrowth: return "power_growth";
    case Kind::AdversarialPower: return "adversarial_power";
  }
  return "unknown";
}

double HessianPolicy::norm() const {
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::PowerGrowth:
      return std::max(a_, b_ * std::pow(static_cast<double>(successful_), p_));
    case Kind::AdversarialPower:
      return iteration_ == 0 ? 1.0 : std::pow(static_cast<double>(iteration_), p_);
  }
  return 0.0;
}

void HessianPolicy::advance(bool accepted) {
  ++iteration_;
  if (accepted) ++successful_;
}

GrowthConstants HessianPolicy::growth() const {
  switch (kind_) {
    case Kind::Constant: {
      const double mu = a_ > 0.0 ? a_ : 1.0;
      return {mu, mu, 0.0};
    }
    case Kind::PowerGrowth: return {a_, b_, p_};
    case Kind::AdversarialPower: return {1.0, 1.0, p_};
  }
  return {};
}

}  // namespace ubtr
