#include "ubtr/adversary.hpp"

#include "ubtr/cauchy.hpp"
#include "ubtr/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace ubtr {

double HermitePiece::increment(double tau0, double tau1) const {
  const double d = tau1 - tau0;
  const double sum = tau1 + tau0;
  const double sq = tau1 * tau1 + tau1 * tau0 + tau0 * tau0;
  return d * (c1 + c2 * sum + c3 * sq);
}

namespace {

constexpr int kMaxIterations = 50'000'000;

void check_domain(double epsilon, double p) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) throw InputError("epsilon must lie in (0, 1/2]");
  if (!(p >= 0.0 && p < 1.0)) throw InputError("p must lie in [0, 1)");
}

// Coefficients of the cubic through (0, f0, g0) and (s, f1, g1).
HermitePiece hermite(double f0, double g0, double f1, double g1, double s) {
  const double r1 = f1 - (f0 + g0 * s);
  const double r2 = g1 - g0;
  HermitePiece pc;
  pc.c0 = f0;
  pc.c1 = g0;
  pc.length = s;
  if (r1 == 0.0) {
    pc.c3 = r2 / (s * s);
    pc.c2 = -s * pc.c3;
  } else {
    pc.c3 = (s * r2 - 2.0 * r1) / (s * s * s);
    pc.c2 = (3.0 * r1 - s * r2) / (s * s);
  }
  return pc;
}

}  // namespace

int k_eps(double epsilon, double p) {
  check_domain(epsilon, p);
  const double v = std::pow(epsilon, -2.0 / (1.0 - p));
  if (!(v < kMaxIterations)) {
    std::ostringstream msg;
    msg << "eps^(-2/(1-p)) = " << v << " exceeds the supported instance size " << kMaxIterations;
    throw InputError(msg.str());
  }
  const double nearest = std::nearbyint(v);
  const double ulp = std::nextafter(v, std::numeric_limits<double>::infinity()) - v;
  if (std::abs(v - nearest) <= 4.0 * ulp) return static_cast<int>(nearest);
  return static_cast<int>(std::floor(v));
}

AdversarialInstance build_instance(double epsilon, double p, const InstanceOptions& opts) {
  const int ke = k_eps(epsilon, p);
  if (!(opts.alpha > 0.0) || !std::isfinite(opts.alpha)) throw InputError("alpha must be positive");
  const double beta_min = 2.0 / opts.alpha + 1.0;
  if (!(opts.beta >= beta_min)) {
    std::ostringstream msg;
    msg << "beta = " << opts.beta << " is below the required bound 2/alpha + 1 = " << beta_min;
    throw InputError(msg.str());
  }
  if (!(opts.gamma3 > 1.0) || !(opts.delta_max > 1.0)) {
    throw InputError("instance radius trajectory needs gamma3 > 1 and delta_max > 1");
  }

  AdversarialInstance inst;
  inst.epsilon_ = epsilon;
  inst.p_ = p;
  inst.opts_ = opts;
  inst.k_eps_ = ke;

  const auto n = static_cast<std::size_t>(ke) + 1;  // k = 0..k_eps
  inst.w_.resize(n);
  inst.B_.resize(n);
  inst.delta_.resize(n);
  inst.nu_.resize(n);
  inst.s1_.resize(n);
  inst.x_.resize(n + 2);
  inst.f_.resize(n + 2);
  inst.g_.resize(n + 2);
  inst.s_.resize(n + 1);

  // Offsets: x_, f_, g_, s_ hold k = -1 at index 0.
  double delta = 1.0;
  for (int k = 0; k <= ke; ++k) {
    const auto i = static_cast<std::size_t>(k);
    inst.w_[i] = static_cast<double>(ke - k) / ke;
    inst.g_[i + 1] = -epsilon * (1.0 + inst.w_[i]);
    inst.B_[i] = k == 0 ? 1.0 : std::pow(static_cast<double>(k), p);
    inst.delta_[i] = delta;
    inst.s_[i + 1] = -inst.g_[i + 1] / inst.B_[i];
    inst.nu_[i] = select_nu(delta, inst.B_[i], opts.alpha);
    inst.s1_[i] = -inst.nu_[i] * inst.g_[i + 1];
    delta = std::min(opts.gamma3 * delta, opts.delta_max);
  }

  inst.x_[1] = 0.0;
  inst.f_[1] = 8.0 * epsilon * epsilon + 4.0 / (1.0 - p);
  for (int k = 1; k <= ke; ++k) {
    const auto i = static_cast<std::size_t>(k) + 1;
    inst.x_[i] = inst.x_[i - 1] + inst.s_[i - 1];
    inst.f_[i] = inst.f_[i - 1] + inst.g_[i - 1] * inst.s_[i - 1];
  }

  // Boundary conditions at both ends.
  inst.s_[0] = 1.0;
  inst.x_[0] = -1.0;
  inst.f_[0] = inst.f_[1];
  inst.g_[0] = 0.0;
  inst.x_[n + 1] = inst.x_[n] + inst.s_[n];
  inst.f_[n + 1] = inst.f_[n];
  inst.g_[n + 1] = inst.g_[n];

  for (std::size_t i = 0; i + 1 < inst.x_.size(); ++i) {
    if (!(inst.x_[i + 1] > inst.x_[i])) throw InternalError("adversarial knots are not increasing");
  }

  inst.pieces_.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    inst.pieces_.push_back(hermite(inst.f_[i], inst.g_[i], inst.f_[i + 1], inst.g_[i + 1], inst.s_[i]));
  }
  return inst;
}

int AdversarialInstance::locate(double x) const {
  if (x <= x_.front()) return -2;
  if (x > x_.back()) return k_eps_ + 1;
  // First knot >= x; x lies in (x_{j-1}, x_j].
  const auto it = std::lower_bound(x_.begin(), x_.end(), x);
  return static_cast<int>(it - x_.begin()) - 2;
}

double eval_f(const AdversarialInstance& inst, double x) {
  const int k = inst.locate(x);
  if (k == -2) return inst.f(0);
  if (k == inst.k_eps() + 1) return inst.f(inst.k_eps());
  if (x == inst.x(k + 1)) return inst.f(k + 1);
  return inst.piece(k).value(x - inst.x(k));
}

double eval_fprime(const AdversarialInstance& inst, double x) {
  const int k = inst.locate(x);
  if (k == -2 || k == inst.k_eps() + 1) return 0.0;
  if (x == inst.x(k + 1)) return inst.g(k + 1);
  return inst.piece(k).derivative(x - inst.x(k));
}

Problem make_problem(std::shared_ptr<const AdversarialInstance> inst) {
  if (!inst) throw InputError("make_problem: null instance");
  auto f = [inst](const Vector& x) { return eval_f(*inst, x[0]); };
  auto grad = [inst](const Vector& x) {
    Vector g(1);
    g[0] = eval_fprime(*inst, x[0]);
    return g;
  };
  return make_unconstrained(f, grad, RegularizerSpec::zero(), Vector::Zero(1));
}

std::vector<std::string> audit_instance(const AdversarialInstance& inst) {
  std::vector<std::string> issues;
  auto fail = [&issues](const std::string& what, int k) {
    std::ostringstream msg;
    msg << what << " (k = " << k << ")";
    issues.push_back(msg.str());
  };

  const int ke = inst.k_eps();
  const double eps = inst.epsilon();
  const double p = inst.p();
  const double f0 = inst.f(0);

  if (inst.beta() < 2.0 / inst.alpha() + 1.0) fail("beta below 2/alpha + 1", -1);
  if (inst.g(ke) != -eps) fail("g_{k_eps} differs from -eps", ke);

  for (int k = 0; k <= ke; ++k) {
    const double fk = inst.f(k);
    if (k < ke && !(std::abs(inst.g(k)) > eps)) fail("|g_k| <= eps before k_eps", k);
    if (k >= 1 && !(fk < inst.f(k - 1))) fail("f_k not strictly decreasing", k);
    if (fk < 0.0) fail("f_k negative", k);
    const double bound = 4.0 * eps * eps * (2.0 + std::pow(static_cast<double>(k), 1.0 - p) / (1.0 - p));
    if (f0 - fk > bound + 1e-10) fail("f_0 - f_k exceeds 4 eps^2 (2 + k^(1-p)/(1-p))", k);
    if (std::abs(inst.g(k + 1) - inst.g(k)) > inst.s(k)) fail("|g_{k+1} - g_k| > s_k", k);
    const double cap = std::min(inst.delta(k), inst.beta() * std::abs(inst.s1(k)));
    if (std::abs(inst.s(k)) > cap * (1.0 + 1e-14)) fail("|s_k| > min(Delta_k, beta |s_{k,1}|)", k);
    if (!(inst.s(k) > 0.0) || inst.s(k) > 1.0) fail("s_k outside (0, 1]", k);
    if (std::abs(inst.g(k)) > 1.0 || std::abs(fk) > f0) fail("Hermite bounds with kappa_f = 1", k);
  }
  for (int k = -1; k <= ke; ++k) {
    const HermitePiece& pc = inst.piece(k);
    if (std::abs(pc.value(pc.length) - inst.f(k + 1)) > 1e-12) fail("pi_k(s_k) != f_{k+1}", k);
    if (std::abs(pc.derivative(pc.length) - inst.g(k + 1)) > 1e-12) fail("pi_k'(s_k) != g_{k+1}", k);
  }
  return issues;
}

void write_instance_csv(const AdversarialInstance& inst, std::ostream& out) {
  out << "k,x_k,f_k,g_k,s_k,B_k,c0,c1,c2,c3\n";
  for (int k = -1; k <= inst.k_eps(); ++k) {
    const HermitePiece& pc = inst.piece(k);
    out << k << ',' << shortest(inst.x(k)) << ',' << shortest(inst.f(k)) << ','
        << shortest(inst.g(k)) << ',' << shortest(inst.s(k)) << ','
        << (k >= 0 ? shortest(inst.B(k)) : std::string()) << ',' << shortest(pc.c0) << ','
        << shortest(pc.c1) << ',' << shortest(pc.c2) << ',' << shortest(pc.c3) << '\n';
  }
}

}  // namespace ubtr
