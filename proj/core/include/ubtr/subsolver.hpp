#pragma once

#include "ubtr/types.hpp"

namespace ubtr {

/// Quadratic-plus-regularizer model m(s) = f(x) + g's + b/2 ||s||^2 + h(x + s)
/// restricted to box ∩ (radius_eff ball), with B = b * I.
struct SubproblemSpec {
  Vector x;
  Vector grad;
  double b = 0.0;
  double radius_eff = 0.0;
  Vector s1;
  RegularizerSpec regularizer;
  Vector lower;
  Vector upper;
  /// Only used to size the proximal-gradient step.
  double alpha = 1e16;

  static SubproblemSpec from(const Problem& problem, const Vector& x, const Vector& grad, double b,
                             double radius_eff, const Vector& s1, double alpha);
};

struct SubproblemResult {
  Vector s;
  int inner_iterations = 0;
  /// m(0) - m(s), computed without the f(x) term.
  double model_decrease = 0.0;
};

/// m(0) - m(s) for the model of `spec`.
double model_decrease(const SubproblemSpec& spec, const Vector& s);

/// Proximal-gradient iterations on the model, warm-started at s1, with step
/// 1 / (b + 1/(alpha * radius_eff)). Returns the best iterate by model value,
/// so the result never does worse than s1 (s1 itself when max_inner == 0).
SubproblemResult solve_model(const SubproblemSpec& spec, int max_inner = 50);

/// Global minimizer -grad / b of the smooth unconstrained model.
Vector solve_model_analytic(const Vector& grad, double b);

}  // namespace ubtr
