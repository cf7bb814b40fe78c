#pragma once

// Domain types shared by every ubtr module.

#include <Eigen/Core>

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace ubtr {

using Vector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Bad caller input: violated preconditions, infeasible points, nonfinite
/// oracle values.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity contradicts a guarantee of the method (a broken prox,
/// a model step that does not decrease the model, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class RegularizerKind { Zero, L1 };

/// h(x) = 0 or h(x) = weight * ||x||_1.
struct RegularizerSpec {
  RegularizerKind kind = RegularizerKind::Zero;
  double weight = 0.0;

  static RegularizerSpec zero() { return {}; }
  static RegularizerSpec l1(double lambda) { return {RegularizerKind::L1, lambda}; }

  /// Weight actually applied; Zero behaves as L1 with weight 0.
  double effective_weight() const {
    return kind == RegularizerKind::L1 ? weight : 0.0;
  }
  void validate() const;
};

using ValueOracle = std::function<double(const Vector&)>;
using GradientOracle = std::function<Vector(const Vector&)>;

/// minimize f(x) + h(x) subject to lower <= x <= upper, started from x0.
/// Bounds may be +-infinity. Oracles must be deterministic.
struct Problem {
  ValueOracle f;
  GradientOracle grad;
  RegularizerSpec regularizer;
  Vector lower;
  Vector upper;
  Vector x0;

  Eigen::Index dim() const { return x0.size(); }

  /// Checks sizes, lower <= upper and the presence of both oracles.
  void validate() const;
  bool feasible(const Vector& x) const;
  bool unconstrained() const;
};

/// Build an unconstrained problem (bounds at +-infinity).
Problem make_unconstrained(ValueOracle f, GradientOracle grad, RegularizerSpec h, Vector x0);

/// Constants of the outer trust-region loop.
struct TRParams {
  double eta1 = 1e-3;
  double eta2 = 0.75;
  double gamma1 = 1.0 / 3.0;
  double gamma2 = 0.9;
  double gamma3 = 3.0;
  double gamma4 = 5.0;
  double delta0 = 1.0;
  double delta_max = 1e3;
  double alpha = 1e16;
  double beta = 1e16;
  double epsilon = 1e-6;
  int max_iter = 10000;

  /// Throws InputError naming the first violated constraint of
  /// 0 < eta1 <= eta2 < 1, 0 < 1/gamma3 <= gamma1 <= gamma2 < 1 < gamma3 <= gamma4,
  /// delta_max > delta0 > 0, alpha > 0, beta >= 1, epsilon in (0, 1), max_iter > 0.
  void validate() const;
};

/// The feasible set of a step s: lower_shift <= s <= upper_shift and ||s||_inf <= radius.
struct BoxBall {
  Vector lower_shift;
  Vector upper_shift;
  double radius = kInf;

  static BoxBall around(const Problem& problem, const Vector& x, double radius);
  static BoxBall unbounded(Eigen::Index n, double radius = kInf);

  /// Lower end of the feasible interval of coordinate i.
  double lo(Eigen::Index i) const;
  double hi(Eigen::Index i) const;
};

}  // namespace ubtr
