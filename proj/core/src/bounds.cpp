#include "ubtr/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace ubtr {

void BoundInputs::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InputError(what);
  };
  require(f0_plus_h0 >= f_low, "bounds: need (f+h)(x0) >= (f+h)_low");
  require(eta1 > 0.0 && eta1 <= eta2 && eta2 < 1.0, "bounds: need 0 < eta1 <= eta2 < 1");
  require(kappa_mdc > 0.0 && kappa_mdc <= 1.0, "bounds: kappa_mdc must lie in (0, 1]");
  require(kappa_ubd > 0.0, "bounds: kappa_ubd must be positive");
  require(mu1 > 0.0 && mu2 > 0.0, "bounds: mu1 and mu2 must be positive");
  require(p >= 0.0 && p < 1.0, "bounds: p must lie in [0, 1)");
  require(alpha > 0.0 && beta >= 1.0, "bounds: need alpha > 0, beta >= 1");
  require(epsilon > 0.0 && epsilon < 1.0, "bounds: epsilon must lie in (0, 1)");
  require(gamma1 > 0.0 && gamma2 > 0.0 && gamma2 < 1.0 && gamma4 > 1.0,
          "bounds: need gamma1 > 0, 0 < gamma2 < 1 < gamma4");
  require(delta0 > 0.0, "bounds: delta0 must be positive");
}

double delta_succ(const BoundInputs& in) {
  return in.kappa_mdc * (1.0 - in.eta2) / (2.0 * in.kappa_ubd * in.alpha * in.beta * in.beta);
}

double delta_min(const BoundInputs& in) { return std::min(in.delta0, in.gamma1 * delta_succ(in)); }

const char* to_string(BoundRegime r) {
  return r == BoundRegime::Bounded ? "bounded" : "growth";
}

SuccessfulBound successful_bound(const BoundInputs& in) {
  in.validate();
  const double dmin = delta_min(in);
  const double c = 1.0 / (in.alpha * dmin);
  const double gap = in.f0_plus_h0 - in.f_low;
  const double scale = gap / (in.eta1 * in.kappa_mdc * in.epsilon * in.epsilon);

  SuccessfulBound out;
  out.bounded = std::max(in.mu1 * (1.0 + c) + c, 2.0 * c) * scale;
  out.growth = std::pow(2.0 * in.mu2 * (1.0 + c) * scale, 1.0 / (1.0 - in.p));

  const double grown = in.mu2 * std::pow(out.growth, in.p);
  const bool small_growth = in.mu1 < grown && grown < 1.0 / (1.0 + in.alpha * dmin);
  out.regime = (in.mu1 >= grown || small_growth) ? BoundRegime::Bounded : BoundRegime::Growth;
  return out;
}

double unsuccessful_bound(int n_successful, const BoundInputs& in) {
  in.validate();
  const double log_g2 = std::log(in.gamma2);
  return std::log(delta_min(in) / in.delta0) / log_g2 +
         n_successful * std::abs(std::log(in.gamma4) / log_g2);
}

BoundInputs bound_inputs_from_run(const SolveResult& result, const TRParams& params,
                                  double kappa_ubd, std::optional<double> f_low) {
  BoundInputs in;
  if (result.history.empty()) throw InputError("bounds: run has no iterations");
  in.f0_plus_h0 = result.history.front().f_val + result.history.front().h_val;
  double best = in.f0_plus_h0;
  for (const auto& rec : result.history) best = std::min(best, rec.f_val + rec.h_val);
  in.f_low = f_low.value_or(best);
  in.eta1 = params.eta1;
  in.eta2 = params.eta2;
  in.kappa_mdc = std::min(result.audit.min_nu_margin, 1.0);
  in.kappa_ubd = kappa_ubd;
  in.mu1 = result.growth.mu1;
  in.mu2 = result.growth.mu2;
  in.p = result.growth.p;
  in.alpha = params.alpha;
  in.beta = params.beta;
  in.epsilon = params.epsilon;
  in.gamma1 = params.gamma1;
  in.gamma2 = params.gamma2;
  in.gamma4 = params.gamma4;
  in.delta0 = params.delta0;
  return in;
}

}  // namespace ubtr
