#pragma once

#include <string>

namespace ubtr {

/// Constants (mu1, mu2, p) of the growth condition
/// max_{j<=k} ||B_j|| <= max(mu1, mu2 * sigma_k^p).
struct GrowthConstants {
  double mu1 = 1.0;
  double mu2 = 1.0;
  double p = 0.0;

  double cap(int sigma) const;
};

/// Produces B_k = b_k * I and tracks the successful-iteration counter sigma.
///
///  - Constant(b):             b_k = b.
///  - PowerGrowth(mu1, mu2, p): b_k = max(mu1, mu2 * sigma^p), sigma counted
///                              before iteration k.
///  - AdversarialPower(p):     b_0 = 1, b_k = k^p with k the outer iteration.
class HessianPolicy {
 public:
  enum class Kind { Constant, PowerGrowth, AdversarialPower };

  static HessianPolicy constant(double b);
  static HessianPolicy power_growth(double mu1, double mu2, double p);
  static HessianPolicy adversarial_power(double p);

  Kind kind() const { return kind_; }
  std::string name() const;

  /// ||B_k|| for the current iteration.
  double norm() const;
  /// Call once per finished iteration (after the acceptance test).
  void advance(bool accepted);

  int iteration() const { return iteration_; }
  int successful() const { return successful_; }
  GrowthConstants growth() const;

 private:
  HessianPolicy(Kind kind, double a, double b, double p);

  Kind kind_;
  double a_;
  double b_;
  double p_;
  int iteration_ = 0;
  int successful_ = 0;
};

}  // namespace ubtr
