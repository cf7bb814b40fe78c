#include "ubtr/cli/commands.hpp"

#include "ubtr/adversary.hpp"
#include "ubtr/bounds.hpp"
#include "ubtr/cli/builtin.hpp"
#include "ubtr/cli/log_table.hpp"
#include "ubtr/format.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

namespace ubtr::cli {

namespace fs = std::filesystem;

namespace {

bool isatty_stdout() { return ::isatty(STDOUT_FILENO) == 1; }

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

InstanceOptions instance_options(const TRParams& p) {
  return {p.alpha, p.beta, p.gamma3, p.delta_max};
}

std::shared_ptr<const AdversarialInstance> instance_for(const ExperimentConfig& cfg) {
  const TRParams p = cfg.effective_params();
  return std::make_shared<const AdversarialInstance>(
      build_instance(cfg.adversarial->epsilon, cfg.adversarial->p, instance_options(p)));
}

void print_audit(const AuditReport& a, std::ostream& out) {
  out << "audit: nu_k ||B_k|| < 1           " << verdict(a.nu_ok())
      << " (min 1 - nu ||B|| = " << scientific(a.min_nu_margin, 2) << ")\n";
  out << "audit: model decrease >= kappa xi  " << verdict(a.model_decrease_ok())
      << " (min slack = " << scientific(a.min_model_decrease_slack, 2) << ")\n";
  out << "audit: Hessian growth             " << verdict(a.growth_ok) << '\n';
  out << "audit: step inside region         " << verdict(a.step_in_region) << '\n';
  out << "audit: monotone objective         " << verdict(a.monotone) << '\n';
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open '" << path.string() << "' for writing\n";
    return false;
  }
  f << content;
  f.flush();
  if (!f) {
    err << "error: failed writing '" << path.string() << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err,
               const OutputOptions& opts) {
  cfg.validate();
  if (!cfg.adversarial) {
    err << "error: verify needs an adversarial problem\n";
    return kExitUsage;
  }
  const auto inst = instance_for(cfg);
  const Problem problem = make_problem(inst);
  const SolveResult result =
      run(problem, cfg.effective_params(), cfg.effective_policy(), {SubsolverMode::Analytic, cfg.max_inner});

  print_log(result, out, opts.color);
  const auto issues = audit_instance(*inst);
  for (const auto& msg : issues) out << "instance invariant violated: " << msg << '\n';
  out << "audit: instance invariants        " << verdict(issues.empty()) << '\n';
  print_audit(result.audit, out);

  const bool counts_match = result.iterations == inst->k_eps();
  out << "observed iterations: " << result.iterations << ", k_eps: " << inst->k_eps()
      << (counts_match ? " (match)" : " (MISMATCH)") << '\n';

  const bool ok = counts_match && result.status == SolveStatus::FirstOrderStationary &&
                  result.audit.passed() && issues.empty();
  if (!counts_match) {
    err << "error: observed " << result.iterations << " iterations, expected k_eps = " << inst->k_eps()
        << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_solve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err,
              const OutputOptions& opts) {
  cfg.validate();
  if (!cfg.builtin) {
    err << "error: solve needs a builtin problem (--builtin)\n";
    return kExitUsage;
  }
  const BuiltinProblem bp = make_builtin(*cfg.builtin);
  const SolveResult result = run(bp.problem, cfg.effective_params(), cfg.effective_policy(),
                                 {cfg.effective_mode(), cfg.max_inner});

  out << "problem: " << bp.name << " (" << bp.description << ")\n";
  print_log(result, out, opts.color);
  print_audit(result.audit, out);
  out << "x* =";
  for (Eigen::Index i = 0; i < result.final_x.size(); ++i) out << ' ' << shortest(result.final_x[i]);
  out << "\n|x* - known solution|_inf = "
      << scientific((result.final_x - bp.solution).lpNorm<Eigen::Infinity>(), 2) << '\n';

  if (!cfg.out.empty()) {
    std::ostringstream csv;
    write_history_csv(result, csv);
    if (!write_file(cfg.out, csv.str(), err)) return kExitIo;
    out << "history written to " << cfg.out << '\n';
  }

  switch (result.status) {
    case SolveStatus::FirstOrderStationary: return kExitOk;
    case SolveStatus::MaxIter: return kExitNotConverged;
    case SolveStatus::Error: break;
  }
  err << "error: " << result.message << '\n';
  return kExitMismatch;
}

std::vector<double> emit_grid(const AdversarialInstance& inst, int samples) {
  const double a = inst.x(-1);
  const double b = inst.x(inst.k_eps() + 1);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(samples) + static_cast<std::size_t>(inst.k_eps()) + 3);
  for (int i = 0; i < samples; ++i) {
    xs.push_back(i + 1 == samples ? b : a + (b - a) * i / (samples - 1));
  }
  for (int k = -1; k <= inst.k_eps() + 1; ++k) xs.push_back(inst.x(k));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

int cmd_emit(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  if (!cfg.adversarial) {
    err << "error: emit needs an adversarial problem\n";
    return kExitUsage;
  }
  const auto inst = instance_for(cfg);
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create directory '" << dir.string() << "': " << ec.message() << '\n';
    return kExitIo;
  }

  const std::vector<double> xs = emit_grid(*inst, cfg.samples);
  std::ostringstream f_csv, fp_csv, it_csv, st_csv, inst_csv;
  f_csv << "x,f\n";
  fp_csv << "x,fprime\n";
  for (double x : xs) {
    f_csv << shortest(x) << ',' << shortest(eval_f(*inst, x)) << '\n';
    fp_csv << shortest(x) << ',' << shortest(eval_fprime(*inst, x)) << '\n';
  }
  it_csv << "k,x_k\n";
  for (int k = 0; k <= inst->k_eps() + 1; ++k) it_csv << k << ',' << shortest(inst->x(k)) << '\n';
  st_csv << "k,s_k\n";
  for (int k = 0; k <= inst->k_eps(); ++k) st_csv << k << ',' << shortest(inst->s(k)) << '\n';
  write_instance_csv(*inst, inst_csv);

  const std::pair<const char*, std::string> files[] = {
      {"f.csv", f_csv.str()},          {"fprime.csv", fp_csv.str()}, {"iterates.csv", it_csv.str()},
      {"steps.csv", st_csv.str()},     {"instance.csv", inst_csv.str()},
  };
  for (const auto& [name, content] : files) {
    if (!write_file(dir / name, content, err)) return kExitIo;
    out << "wrote " << (dir / name).string() << '\n';
  }
  out << "k_eps = " << inst->k_eps() << ", " << xs.size() << " sample points\n";
  return kExitOk;
}

int cmd_bounds(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const TRParams params = cfg.effective_params();
  Problem problem;
  std::shared_ptr<const AdversarialInstance> inst;
  SubsolverMode mode = cfg.effective_mode();
  if (cfg.adversarial) {
    inst = instance_for(cfg);
    problem = make_problem(inst);
    mode = SubsolverMode::Analytic;
    out << "problem: adversarial eps = " << shortest(inst->epsilon()) << ", p = " << shortest(inst->p())
        << '\n';
  } else {
    const BuiltinProblem bp = make_builtin(cfg.builtin.value_or("quadratic"));
    problem = bp.problem;
    out << "problem: " << bp.name << " (" << bp.description << ")\n";
  }

  const SolveResult result = run(problem, params, cfg.effective_policy(), {mode, cfg.max_inner});
  if (result.status == SolveStatus::Error) {
    err << "error: " << result.message << '\n';
    return kExitMismatch;
  }
  const double kappa_ubd = std::max(cfg.kappa_ubd, result.audit.max_model_error_ratio);
  const BoundInputs in = bound_inputs_from_run(result, params, kappa_ubd, cfg.f_low);
  const SuccessfulBound sb = successful_bound(in);
  const double ub = unsuccessful_bound(result.n_successful, in);

  out << "observed: |S| = " << result.n_successful << ", |U| = " << result.n_unsuccessful
      << ", status = " << to_string(result.status) << '\n';
  out << "kappa_mdc = " << scientific(in.kappa_mdc, 3) << ", kappa_ubd = " << scientific(in.kappa_ubd, 3)
      << ", (f+h)(x0) - (f+h)_low = " << scientific(in.f0_plus_h0 - in.f_low, 3) << '\n';
  out << "mu1 = " << shortest(in.mu1) << ", mu2 = " << shortest(in.mu2) << ", p = " << shortest(in.p) << '\n';
  out << "Delta_succ = " << scientific(delta_succ(in), 3) << '\n';
  out << "Delta_min = " << scientific(delta_min(in), 3) << '\n';
  out << "successful bound (bounded regime) = " << scientific(sb.bounded, 3) << '\n';
  out << "successful bound (growth regime) = " << scientific(sb.growth, 3) << '\n';
  out << "regime: " << to_string(sb.regime) << ", |S| <= " << scientific(sb.applicable(), 3)
      << (result.n_successful <= sb.applicable() ? " (holds)" : " (VIOLATED)") << '\n';
  out << "unsuccessful bound = " << scientific(ub, 3)
      << (result.n_unsuccessful <= ub ? " (holds)" : " (VIOLATED)") << '\n';
  if (inst) out << "k_eps = " << inst->k_eps() << '\n';
  return kExitOk;
}

namespace {

struct Overrides {
  std::string config;
  std::optional<double> epsilon, p, alpha, beta, gamma3, delta_max;
  std::optional<int> max_iter, samples;
  std::optional<std::string> out, builtin, mode;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--epsilon", o.epsilon,
                  "adversarial epsilon (or the stopping tolerance for builtin problems)");
  cmd->add_option("--p", o.p, "growth exponent p of the adversarial instance");
  cmd->add_option("--alpha", o.alpha, "alpha");
  cmd->add_option("--beta", o.beta, "beta");
  cmd->add_option("--gamma3", o.gamma3, "very-successful radius factor");
  cmd->add_option("--delta-max", o.delta_max, "maximum trust-region radius");
  cmd->add_option("--max-iter", o.max_iter, "outer iteration cap");
  cmd->add_option("--out", o.out, "output path (CSV file for solve, directory for emit)");
  cmd->add_option("--builtin", o.builtin, "builtin problem: quadratic, lasso, box_quadratic, box_lasso");
  cmd->add_option("--samples", o.samples, "number of uniform f / f' samples for emit");
  cmd->add_option("--mode", o.mode, "subsolver mode: iterative or analytic");
}

ExperimentConfig resolve(const Overrides& o, const std::string& command) {
  ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : load_config(o.config);
  if (o.builtin) {
    cfg.builtin = *o.builtin;
    cfg.adversarial.reset();
  }
  if (!cfg.builtin && !cfg.adversarial && command != "solve") cfg.adversarial = AdversarialSelection{};
  if (!cfg.builtin && !cfg.adversarial && command == "solve") cfg.builtin = "quadratic";

  if (o.epsilon) {
    if (cfg.adversarial) {
      cfg.adversarial->epsilon = *o.epsilon;
      cfg.epsilon_given = false;
    } else {
      cfg.params.epsilon = *o.epsilon;
    }
  }
  if (o.p) {
    if (!cfg.adversarial) throw InputError("--p applies to adversarial problems only");
    cfg.adversarial->p = *o.p;
    if (cfg.hessian && cfg.hessian->kind == HessianPolicy::Kind::AdversarialPower) cfg.hessian->p = *o.p;
  }
  if (o.alpha) cfg.params.alpha = *o.alpha;
  if (o.beta) cfg.params.beta = *o.beta;
  if (o.gamma3) cfg.params.gamma3 = *o.gamma3;
  if (o.delta_max) cfg.params.delta_max = *o.delta_max;
  if (o.max_iter) cfg.params.max_iter = *o.max_iter;
  if (o.samples) cfg.samples = *o.samples;
  if (o.out) cfg.out = *o.out;
  if (o.mode) {
    if (*o.mode == "iterative") {
      cfg.mode = SubsolverMode::Iterative;
    } else if (*o.mode == "analytic") {
      cfg.mode = SubsolverMode::Analytic;
    } else {
      throw InputError("unknown --mode '" + *o.mode + "'");
    }
  }
  return cfg;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trust-region solver for regularized problems with unbounded Hessian growth"};
  app.require_subcommand(1);

  Overrides verify_o, solve_o, emit_o, bounds_o;
  CLI::App* verify = app.add_subcommand("verify", "reproduce the exact iteration count on the adversarial instance");
  CLI::App* solve = app.add_subcommand("solve", "solve a builtin problem");
  CLI::App* emit = app.add_subcommand("emit", "write CSV tables of the adversarial objective");
  CLI::App* bounds = app.add_subcommand("bounds", "print the worst-case iteration bounds");
  add_common_options(verify, verify_o);
  add_common_options(solve, solve_o);
  add_common_options(emit, emit_o);
  add_common_options(bounds, bounds_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const char* no_color = std::getenv("NO_COLOR");
  OutputOptions opts;
  opts.color = (no_color == nullptr || *no_color == '\0') && &out == &std::cout && isatty_stdout();

  try {
    if (*verify) return cmd_verify(resolve(verify_o, "verify"), out, err, opts);
    if (*solve) return cmd_solve(resolve(solve_o, "solve"), out, err, opts);
    if (*emit) return cmd_emit(resolve(emit_o, "emit"), out, err);
    if (*bounds) return cmd_bounds(resolve(bounds_o, "bounds"), out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace ubtr::cli
