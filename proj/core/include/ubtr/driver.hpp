#pragma once

// Outer loop of the nonsmooth trust-region method with a possibly unbounded
// Hessian approximation B_k = b_k * I.

#include "ubtr/hessian.hpp"
#include "ubtr/types.hpp"

#include <limits>
#include <string>
#include <vector>

namespace ubtr {

enum class SubsolverMode { Iterative, Analytic };

enum class StepStatus { VerySuccessful, Successful, Unsuccessful, Terminated };

const char* to_string(StepStatus s);

/// One row of the iteration log. For the terminal row (status Terminated)
/// sqrt_xi, rho and model_decrease are NaN and s_norm is ||s_{k,1}||.
struct IterationRecord {
  int k = 0;
  int inner = 0;
  double f_val = 0.0;
  double h_val = 0.0;
  double criticality = 0.0;
  double sqrt_xi = std::numeric_limits<double>::quiet_NaN();
  double rho = std::numeric_limits<double>::quiet_NaN();
  double delta = 0.0;
  double x_norm = 0.0;
  double s_norm = 0.0;
  double B_norm = 0.0;
  double nu = 0.0;
  double xi_cp = 0.0;
  double model_decrease = std::numeric_limits<double>::quiet_NaN();
  StepStatus status = StepStatus::Terminated;
};

/// Runtime checks of the assumptions the complexity analysis relies on.
struct AuditReport {
  /// min_k (1 - nu_k ||B_k||); positive iff nu_k ||B_k|| < 1 at every iteration.
  double min_nu_margin = 1.0;
  /// min_k [m(0) - m(s_k) - (1 - nu_k ||B_k||) xi_cp]; must stay >= -1e-10.
  double min_model_decrease_slack = std::numeric_limits<double>::infinity();
  /// max_k |(f+h)(x_k+s_k) - m(s_k)| / ((1 + ||B_k||) ||s_k||^2).
  double max_model_error_ratio = 0.0;
  bool growth_ok = true;
  bool step_in_region = true;
  bool monotone = true;

  bool nu_ok() const { return min_nu_margin > 0.0; }
  bool model_decrease_ok() const { return min_model_decrease_slack >= -1e-10; }
  bool passed() const {
    return nu_ok() && model_decrease_ok() && growth_ok && step_in_region && monotone;
  }
};

enum class SolveStatus { FirstOrderStationary, MaxIter, Error };

const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Error;
  Vector final_x;
  /// Outer iterations with a step attempt; excludes the terminal check.
  int iterations = 0;
  int n_successful = 0;
  int n_unsuccessful = 0;
  std::vector<IterationRecord> history;
  AuditReport audit;
  GrowthConstants growth;
  std::string message;

  const IterationRecord* terminal() const;
  double final_objective() const;
};

struct SolverOptions {
  SubsolverMode mode = SubsolverMode::Iterative;
  int max_inner = 50;
};

/// actual / predicted. Throws InternalError unless model_decrease > 0.
double rho(double actual_decrease, double model_decrease);

/// Run the trust-region method from problem.x0. Invalid problems or parameters
/// throw InputError; failures during the run (nonfinite oracle values, a
/// nonpositive model decrease) end it with status Error and a message.
SolveResult run(const Problem& problem, const TRParams& params, HessianPolicy policy,
                const SolverOptions& options = {});

}  // namespace ubtr
