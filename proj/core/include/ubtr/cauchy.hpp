#pragma once

#include "ubtr/types.hpp"

namespace ubtr {

/// Outcome of the first-order (Cauchy) step at x_k.
struct CauchyResult {
  double nu = 0.0;
  Vector s1;
  /// Optimal decrease of the first-order model: (f+h)(x) - (f(x) + g's1 + h(x+s1)).
  double xi_cp = 0.0;
  /// sqrt(xi_cp / nu); equals ||grad|| in the smooth unconstrained case.
  double criticality = 0.0;
};

/// Largest admissible step size 1 / (1/(alpha*delta) + norm_b * (1 + 1/(alpha*delta))).
double select_nu(double delta, double norm_b, double alpha);

/// 1 - nu * norm_b for nu = select_nu(delta, norm_b, alpha), evaluated without
/// cancellation. Strictly positive whenever alpha * delta is finite, even when
/// the rounded product nu * norm_b equals 1.
double nu_norm_margin(double delta, double norm_b, double alpha);

/// Cauchy step s1 = prox(-nu * grad) over box ∩ (delta ball), with its model
/// decrease and criticality measure. Throws InternalError if the decrease is
/// below -1e-10 (a broken prox); smaller negative values are clamped to 0.
CauchyResult cauchy_step(const Problem& problem, const Vector& x, const Vector& grad, double nu,
                         double delta);

}  // namespace ubtr
