#include "ubtr/subsolver.hpp"

#include "ubtr/prox.hpp"

#include <cmath>
#include <sstream>

namespace ubtr {

SubproblemSpec SubproblemSpec::from(const Problem& problem, const Vector& x, const Vector& grad,
                                    double b, double radius_eff, const Vector& s1, double alpha) {
  SubproblemSpec spec;
  spec.x = x;
  spec.grad = grad;
  spec.b = b;
  spec.radius_eff = radius_eff;
  spec.s1 = s1;
  spec.regularizer = problem.regularizer;
  spec.lower = problem.lower;
  spec.upper = problem.upper;
  spec.alpha = alpha;
  return spec;
}

double model_decrease(const SubproblemSpec& spec, const Vector& s) {
  double dec = -spec.grad.dot(s) - 0.5 * spec.b * s.squaredNorm();
  if (spec.regularizer.effective_weight() != 0.0) {
    dec += eval_h(spec.regularizer, spec.x) - eval_h(spec.regularizer, spec.x + s);
  }
  return dec;
}

SubproblemResult solve_model(const SubproblemSpec& spec, int max_inner) {
  if (spec.b < 0.0 || !std::isfinite(spec.b)) throw InputError("solve_model: need finite b >= 0");
  if (max_inner < 0) throw InputError("solve_model: max_inner must be >= 0");

  SubproblemResult best{spec.s1, 0, model_decrease(spec, spec.s1)};
  if (!(spec.radius_eff > 0.0)) return best;  // s1 == 0, nothing to improve

  const BoxBall region{spec.lower - spec.x, spec.upper - spec.x, spec.radius_eff};
  const double step = 1.0 / (spec.b + 1.0 / (spec.alpha * spec.radius_eff));

  Vector s = spec.s1;
  for (int it = 1; it <= max_inner; ++it) {
    const Vector q = s - step * (spec.grad + spec.b * s);
    Vector next = prox_separable(spec.regularizer, q, step, spec.x, region);
    const double change = (next - s).lpNorm<Eigen::Infinity>();
    const double dec = model_decrease(spec, next);
    best.inner_iterations = it;
    if (dec > best.model_decrease) {
      best.s = next;
      best.model_decrease = dec;
    }
    s = std::move(next);
    if (change < 1e-10) break;
  }

  const double floor = model_decrease(spec, spec.s1);
  if (best.model_decrease < floor - 1e-12) {
    std::ostringstream msg;
    msg << "model step increases the model over the Cauchy step by " << floor - best.model_decrease;
    throw InternalError(msg.str());
  }
  return best;
}

Vector solve_model_analytic(const Vector& grad, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw InputError("solve_model_analytic: need b > 0");
  return -grad / b;
}

}  // namespace ubtr
