#include "ubtr/cauchy.hpp"

#include "ubtr/prox.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace ubtr {

namespace {

void check_step_inputs(double delta, double norm_b, double alpha) {
  if (!std::isfinite(delta) || !std::isfinite(norm_b) || !std::isfinite(alpha)) {
    throw InputError("select_nu: inputs must be finite");
  }
  if (!(delta > 0.0) || !(alpha > 0.0) || norm_b < 0.0) {
    throw InputError("select_nu: need delta > 0, alpha > 0, norm_b >= 0");
  }
}

}  // namespace

double select_nu(double delta, double norm_b, double alpha) {
  check_step_inputs(delta, norm_b, alpha);
  const double a = 1.0 / (alpha * delta);
  return 1.0 / (a + norm_b * (1.0 + a));
}

double nu_norm_margin(double delta, double norm_b, double alpha) {
  check_step_inputs(delta, norm_b, alpha);
  if (norm_b == 0.0) return 1.0;
  // 1 - nu*b = a (1 + 1/b) / (1 + a (1 + 1/b)) with a = 1/(alpha*delta).
  const double a = 1.0 / (alpha * delta);
  const double t = a * (1.0 + 1.0 / norm_b);
  return t / (1.0 + t);
}

CauchyResult cauchy_step(const Problem& problem, const Vector& x, const Vector& grad, double nu,
                         double delta) {
  if (grad.size() != x.size()) throw InputError("cauchy_step: gradient dimension mismatch");
  if (!grad.allFinite()) throw InputError("cauchy_step: gradient is not finite");

  CauchyResult out;
  out.nu = nu;
  const BoxBall region = BoxBall::around(problem, x, delta);
  out.s1 = prox_separable(problem.regularizer, -nu * grad, nu, x, region);

  const RegularizerSpec& h = problem.regularizer;
  double xi = -grad.dot(out.s1);
  if (h.effective_weight() != 0.0) xi += eval_h(h, x) - eval_h(h, x + out.s1);

  if (xi < -1e-10) {
    std::ostringstream msg;
    msg << "negative Cauchy decrease " << xi << " (prox did not minimize the model)";
    throw InternalError(msg.str());
  }
  out.xi_cp = xi < 0.0 ? 0.0 : xi;
  out.criticality = std::sqrt(out.xi_cp / nu);

  // Sufficient decrease of the prox step: xi >= ||s1||^2 / (2 nu).
  assert(out.xi_cp >= 0.5 * out.s1.squaredNorm() / nu -
                          1e-12 * std::max(1.0, 0.5 * out.s1.squaredNorm() / nu));
  return out;
}

}  // namespace ubtr
