#include "ubtr/prox.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ubtr {

double eval_h(const RegularizerSpec& spec, const Vector& x) {
  const double lambda = spec.effective_weight();
  if (lambda == 0.0) return 0.0;
  return lambda * x.lpNorm<1>();
}

double prox_scalar(double q, double nu, double lambda, double shift, double lo, double hi) {
  double s = q;
  if (lambda > 0.0) {
    // Soft-threshold in t = shift + s, written in s to avoid (shift + q) - shift.
    const double t = shift + q;
    const double thr = nu * lambda;
    if (std::abs(t) <= thr) {
      s = -shift;
    } else {
      s = t > 0.0 ? q - thr : q + thr;
    }
  }
  return std::clamp(s, lo, hi);
}

Vector prox_separable(const RegularizerSpec& spec, const Vector& q, double nu, const Vector& shift,
                      const BoxBall& region) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw InputError("prox step nu must be positive and finite");
  if (!(region.radius > 0.0)) throw InputError("trust-region radius must be positive");
  if (q.size() != shift.size() || region.lower_shift.size() != q.size() ||
      region.upper_shift.size() != q.size()) {
    throw InputError("prox_separable: dimension mismatch");
  }
  if (!q.allFinite()) throw InputError("prox_separable: q must be finite");

  const double lambda = spec.effective_weight();
  Vector s(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double lo = region.lo(i);
    const double hi = region.hi(i);
    if (!(lo <= hi)) {
      std::ostringstream msg;
      msg << "empty feasible interval in coordinate " << i << " (infeasible point)";
      throw InputError(msg.str());
    }
    s[i] = prox_scalar(q[i], nu, lambda, shift[i], lo, hi);
  }
  return s;
}

}  // namespace ubtr
