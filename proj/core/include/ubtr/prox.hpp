#pragma once

#include "ubtr/types.hpp"

namespace ubtr {

/// h(x) for the given regularizer: 0 or lambda * ||x||_1.
double eval_h(const RegularizerSpec& spec, const Vector& x);

/// Minimizer over s in [lo, hi] of 0.5 / nu * (s - q)^2 + lambda * |shift + s|.
/// The objective is strictly convex, so clamping the unconstrained minimizer
/// onto the interval is exact.
double prox_scalar(double q, double nu, double lambda, double shift, double lo, double hi);

/// Componentwise prox of psi(s; x) + indicator(box ∩ ball) at q with step nu,
/// where psi(s; x) = h(x + s). Throws InputError if nu <= 0, q is not finite,
/// or some coordinate has an empty feasible interval (x infeasible).
Vector prox_separable(const RegularizerSpec& spec, const Vector& q, double nu, const Vector& shift,
                      const BoxBall& region);

}  // namespace ubtr
