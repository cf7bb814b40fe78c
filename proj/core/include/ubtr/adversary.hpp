#pragma once

// One-dimensional instance on which the trust-region method with B_k = k^p
// needs exactly floor(eps^(-2/(1-p))) iterations. The objective is the
// piecewise-cubic Hermite interpolant of prescribed iterates, values and
// slopes.

#include "ubtr/types.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace ubtr {

/// pi(tau) = c0 + c1 tau + c2 tau^2 + c3 tau^3 on tau in (0, length].
struct HermitePiece {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double length = 0.0;

  double value(double tau) const { return c0 + tau * (c1 + tau * (c2 + tau * c3)); }
  double derivative(double tau) const { return c1 + tau * (2.0 * c2 + 3.0 * tau * c3); }
  /// pi(tau1) - pi(tau0) in factored form, accurate relative to the increment.
  double increment(double tau0, double tau1) const;
};

struct InstanceOptions {
  double alpha = 1e16;
  double beta = 1e16;
  /// Radius trajectory Delta_0 = 1, Delta_{k+1} = min(gamma3 Delta_k, delta_max).
  double gamma3 = 3.0;
  double delta_max = 1e3;
};

/// floor(eps^(-2/(1-p))), snapping to an integer within 4 ulps first.
/// Throws InputError outside eps in (0, 1/2], p in [0, 1).
int k_eps(double epsilon, double p);

class AdversarialInstance {
 public:
  double epsilon() const { return epsilon_; }
  double p() const { return p_; }
  double alpha() const { return opts_.alpha; }
  double beta() const { return opts_.beta; }
  const InstanceOptions& options() const { return opts_; }
  int k_eps() const { return k_eps_; }

  // Knot data; k ranges over [-1, k_eps + 1].
  double x(int k) const { return x_.at(k + 1); }
  double f(int k) const { return f_.at(k + 1); }
  double g(int k) const { return g_.at(k + 1); }
  // k in [-1, k_eps].
  double s(int k) const { return s_.at(k + 1); }
  const HermitePiece& piece(int k) const { return pieces_.at(k + 1); }
  // k in [0, k_eps].
  double w(int k) const { return w_.at(k); }
  double B(int k) const { return B_.at(k); }
  double delta(int k) const { return delta_.at(k); }
  double nu(int k) const { return nu_.at(k); }
  double s1(int k) const { return s1_.at(k); }

  /// Index of the piece containing x, or -2 / k_eps + 1 for the left / right plateau.
  int locate(double x) const;

  friend AdversarialInstance build_instance(double epsilon, double p, const InstanceOptions& opts);

 private:
  double epsilon_ = 0.0;
  double p_ = 0.0;
  InstanceOptions opts_;
  int k_eps_ = 0;
  std::vector<double> x_, f_, g_, s_;
  std::vector<double> w_, B_, delta_, nu_, s1_;
  std::vector<HermitePiece> pieces_;
};

/// Throws InputError unless eps in (0, 1/2], p in [0, 1), alpha > 0 and
/// beta >= 2/alpha + 1.
AdversarialInstance build_instance(double epsilon, double p, const InstanceOptions& opts = {});

/// f(x): f_0 left of x_{-1}, pi_k(x - x_k) on (x_k, x_{k+1}], f_{k_eps} beyond
/// x_{k_eps+1}. Returns the stored f_k exactly at knots.
double eval_f(const AdversarialInstance& inst, double x);
/// Piecewise derivative; 0 on both plateaus, the stored g_k exactly at knots.
double eval_fprime(const AdversarialInstance& inst, double x);

/// The instance as a 1-D problem with h = 0, no bounds, x0 = 0.
Problem make_problem(std::shared_ptr<const AdversarialInstance> inst);

/// Violated construction invariants, one message each; empty when all hold.
std::vector<std::string> audit_instance(const AdversarialInstance& inst);

/// CSV with header k,x_k,f_k,g_k,s_k,B_k,c0,c1,c2,c3; one row per piece
/// k = -1..k_eps (B_k empty for k = -1).
void write_instance_csv(const AdversarialInstance& inst, std::ostream& out);

}  // namespace ubtr
