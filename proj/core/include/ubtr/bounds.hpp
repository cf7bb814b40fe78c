#pragma once

// Closed-form worst-case iteration bounds for comparison with observed counts.

#include "ubtr/driver.hpp"
#include "ubtr/types.hpp"

#include <optional>

namespace ubtr {

struct BoundInputs {
  double f0_plus_h0 = 0.0;
  double f_low = 0.0;
  double eta1 = 1e-3;
  double eta2 = 0.75;
  double kappa_mdc = 0.5;
  double kappa_ubd = 0.5;
  double mu1 = 1.0;
  double mu2 = 1.0;
  double p = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
  double epsilon = 1e-6;
  double gamma1 = 1.0 / 3.0;
  double gamma2 = 0.9;
  double gamma4 = 5.0;
  double delta0 = 1.0;

  /// Throws InputError if a constant is outside its domain.
  void validate() const;
};

/// kappa_mdc (1 - eta2) / (2 kappa_ubd alpha beta^2).
double delta_succ(const BoundInputs& in);
/// min(delta0, gamma1 * delta_succ).
double delta_min(const BoundInputs& in);

enum class BoundRegime { Bounded, Growth };

const char* to_string(BoundRegime r);

struct SuccessfulBound {
  /// max(mu1 (1 + c) + c, 2c) * gap / (eta1 kappa_mdc eps^2), c = 1/(alpha delta_min).
  double bounded = 0.0;
  /// (2 mu2 (1 + c) gap / (eta1 kappa_mdc eps^2))^(1/(1-p)).
  double growth = 0.0;
  /// Regime whose hypothesis holds at the candidate |S| = growth.
  BoundRegime regime = BoundRegime::Growth;

  double applicable() const { return regime == BoundRegime::Bounded ? bounded : growth; }
};

SuccessfulBound successful_bound(const BoundInputs& in);

/// log_{gamma2}(delta_min / delta0) + n_successful |log_{gamma2}(gamma4)|.
double unsuccessful_bound(int n_successful, const BoundInputs& in);

/// Bound inputs derived from a finished run: kappa_mdc = min_k (1 - nu_k ||B_k||),
/// (mu1, mu2, p) from the Hessian policy, f_low = best observed value unless given.
BoundInputs bound_inputs_from_run(const SolveResult& result, const TRParams& params,
                                  double kappa_ubd, std::optional<double> f_low = std::nullopt);

}  // namespace ubtr
