#include "ubtr/driver.hpp"

#include "ubtr/cauchy.hpp"
#include "ubtr/prox.hpp"
#include "ubtr/subsolver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ubtr {

const char* to_string(StepStatus s) {
  switch (s) {
    case StepStatus::VerySuccessful: return "very_successful";
    case StepStatus::Successful: return "successful";
    case StepStatus::Unsuccessful: return "unsuccessful";
    case StepStatus::Terminated: return "terminated";
  }
  return "unknown";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::FirstOrderStationary: return "first-order stationary";
    case SolveStatus::MaxIter: return "maximum number of iterations";
    case SolveStatus::Error: return "error";
  }
  return "unknown";
}

const IterationRecord* SolveResult::terminal() const {
  if (history.empty() || history.back().status != StepStatus::Terminated) return nullptr;
  return &history.back();
}

double SolveResult::final_objective() const {
  if (history.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto& last = history.back();
  return last.f_val + last.h_val;
}

double rho(double actual_decrease, double model_decrease) {
  if (!(model_decrease > 0.0)) {
    std::ostringstream msg;
    msg << "nonpositive model decrease " << model_decrease << " in the ratio test";
    throw InternalError(msg.str());
  }
  return actual_decrease / model_decrease;
}

namespace {

double checked_value(const Problem& problem, const Vector& x) {
  const double v = problem.f(x);
  if (!std::isfinite(v)) throw InputError("objective oracle returned a nonfinite value");
  return v;
}

Vector checked_gradient(const Problem& problem, const Vector& x) {
  Vector g = problem.grad(x);
  if (g.size() != x.size()) throw InputError("gradient oracle returned a vector of the wrong size");
  if (!g.allFinite()) throw InputError("gradient oracle returned a nonfinite value");
  return g;
}

}  // namespace

SolveResult run(const Problem& problem, const TRParams& params, HessianPolicy policy,
                const SolverOptions& options) {
  problem.validate();
  params.validate();
  if (!problem.feasible(problem.x0)) throw InputError("x0 is not feasible for the bounds");
  if (options.mode == SubsolverMode::Analytic &&
      (problem.regularizer.effective_weight() != 0.0 || !problem.unconstrained())) {
    throw InputError("analytic subsolver requires h = 0 and no bounds");
  }

  SolveResult result;
  result.growth = policy.growth();
  AuditReport& audit = result.audit;

  Vector x = problem.x0;
  double delta = params.delta0;
  double f = checked_value(problem, x);
  double h = eval_h(problem.regularizer, x);
  if (!std::isfinite(h)) throw InputError("h(x0) is not finite");
  double max_b = 0.0;

  try {
    for (int k = 0;; ++k) {
      const Vector grad = checked_gradient(problem, x);
      const double b = policy.norm();
      max_b = std::max(max_b, b);

      const double nu = select_nu(delta, b, params.alpha);
      const CauchyResult cp = cauchy_step(problem, x, grad, nu, delta);
      const double margin = nu_norm_margin(delta, b, params.alpha);
      audit.min_nu_margin = std::min(audit.min_nu_margin, margin);

      IterationRecord rec;
      rec.k = k;
      rec.f_val = f;
      rec.h_val = h;
      rec.criticality = cp.criticality;
      rec.delta = delta;
      rec.x_norm = x.norm();
      rec.B_norm = b;
      rec.nu = nu;
      rec.xi_cp = cp.xi_cp;

      if (cp.criticality <= params.epsilon) {
        rec.inner = options.mode == SubsolverMode::Analytic ? 1 : 0;
        rec.s_norm = cp.s1.norm();
        rec.status = StepStatus::Terminated;
        if (max_b > result.growth.cap(policy.successful())) audit.growth_ok = false;
        result.history.push_back(rec);
        result.status = SolveStatus::FirstOrderStationary;
        break;
      }
      if (k >= params.max_iter) {
        result.status = SolveStatus::MaxIter;
        break;
      }

      const double radius_eff = std::min(delta, params.beta * cp.s1.lpNorm<Eigen::Infinity>());
      const SubproblemSpec sub = SubproblemSpec::from(problem, x, grad, b, radius_eff, cp.s1, params.alpha);
      Vector s;
      if (options.mode == SubsolverMode::Analytic) {
        s = solve_model_analytic(grad, b);
        rec.inner = 1;
      } else {
        SubproblemResult sr = solve_model(sub, options.max_inner);
        s = std::move(sr.s);
        rec.inner = sr.inner_iterations;
      }
      const Vector trial = x + s;
      if (s.lpNorm<Eigen::Infinity>() > radius_eff || !problem.feasible(trial)) {
        audit.step_in_region = false;
      }

      const double mdec = model_decrease(sub, s);
      audit.min_model_decrease_slack =
          std::min(audit.min_model_decrease_slack, mdec - margin * cp.xi_cp);

      const double f_trial = checked_value(problem, trial);
      const double h_trial = eval_h(problem.regularizer, trial);
      const double actual = (f + h) - (f_trial + h_trial);
      const double ratio = rho(actual, mdec);

      const double s_sq = s.squaredNorm();
      if (s_sq > 0.0) {
        // m(s) = f + g's + b/2 ||s||^2 + h(x+s); compare with (f+h)(x+s).
        const double model_err = std::abs(actual - mdec);
        audit.max_model_error_ratio =
            std::max(audit.max_model_error_ratio, model_err / ((1.0 + b) * s_sq));
      }

      rec.sqrt_xi = std::sqrt(mdec);
      rec.model_decrease = mdec;
      rec.rho = ratio;
      rec.s_norm = std::sqrt(s_sq);

      const bool accepted = ratio >= params.eta1;
      double next_delta;
      if (ratio >= params.eta2) {
        rec.status = StepStatus::VerySuccessful;
        next_delta = params.gamma3 * delta;
      } else if (accepted) {
        rec.status = StepStatus::Successful;
        next_delta = delta;
      } else {
        rec.status = StepStatus::Unsuccessful;
        next_delta = params.gamma2 * delta;
      }
      result.history.push_back(rec);

      if (accepted) {
        if (f_trial + h_trial > f + h) audit.monotone = false;
        x = trial;
        f = f_trial;
        h = h_trial;
        ++result.n_successful;
      } else {
        ++result.n_unsuccessful;
      }
      ++result.iterations;
      delta = std::min(next_delta, params.delta_max);

      policy.advance(accepted);
      if (max_b > result.growth.cap(policy.successful())) audit.growth_ok = false;
    }
  } catch (const std::exception& e) {
    result.status = SolveStatus::Error;
    result.message = e.what();
  }

  result.final_x = x;
  return result;
}

}  // namespace ubtr
