#pragma once

#include "ubtr/driver.hpp"
#include "ubtr/hessian.hpp"
#include "ubtr/types.hpp"

#include <optional>
#include <string>

#include "json.hpp"

namespace ubtr::cli {

struct AdversarialSelection {
  double epsilon = 0.1;
  double p = 0.1;
};

struct HessianSpec {
  HessianPolicy::Kind kind = HessianPolicy::Kind::Constant;
  double b = 1.0;
  double mu1 = 1.0;
  double mu2 = 1.0;
  double p = 0.0;

  HessianPolicy make() const;
};

/// Everything one CLI invocation needs. JSON layout:
///
///   {
///     "problem":   {"adversarial": {"epsilon": 0.1, "p": 0.1}} | {"builtin": "lasso"},
///     "params":    {"eta1", "eta2", "gamma1".."gamma4", "delta0", "delta_max",
///                   "alpha", "beta", "epsilon", "max_iter"},
///     "hessian":   {"kind": "constant", "b": 1} |
///                  {"kind": "power_growth", "mu1", "mu2", "p"} |
///                  {"kind": "adversarial_power", "p"},
///     "subsolver": {"mode": "iterative" | "analytic", "max_inner": 50},
///     "bounds":    {"kappa_ubd": 0.5, "f_low": 0.0},
///     "output":    {"out": "path", "samples": 2000}
///   }
///
/// Every key is optional. Unknown keys are rejected.
struct ExperimentConfig {
  std::optional<AdversarialSelection> adversarial;
  std::optional<std::string> builtin;
  TRParams params;
  bool epsilon_given = false;
  std::optional<HessianSpec> hessian;
  std::optional<SubsolverMode> mode;
  int max_inner = 50;
  double kappa_ubd = 0.5;
  std::optional<double> f_low;
  std::string out;
  int samples = 2000;

  /// Rejects conflicting selections, an invalid parameter chain, and
  /// beta < 2/alpha + 1 for adversarial runs.
  void validate() const;

  /// Parameters with the adversarial tolerance applied (epsilon of the instance).
  TRParams effective_params() const;
  HessianPolicy effective_policy() const;
  SubsolverMode effective_mode() const;
};

/// Throws InputError on malformed or unknown fields.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

}  // namespace ubtr::cli
