#include "ubtr/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ubtr::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const char* where) {
  if (!obj.is_object()) throw InputError(std::string(where) + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw InputError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& obj, const char* key, T& dst) {
  if (!obj.contains(key)) return;
  try {
    dst = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad value for '") + key + "': " + e.what());
  }
}

HessianPolicy::Kind parse_kind(const std::string& s) {
  if (s == "constant") return HessianPolicy::Kind::Constant;
  if (s == "power_growth") return HessianPolicy::Kind::PowerGrowth;
  if (s == "adversarial_power") return HessianPolicy::Kind::AdversarialPower;
  throw InputError("unknown hessian kind '" + s + "'");
}

SubsolverMode parse_mode(const std::string& s) {
  if (s == "iterative") return SubsolverMode::Iterative;
  if (s == "analytic") return SubsolverMode::Analytic;
  throw InputError("unknown subsolver mode '" + s + "'");
}

}  // namespace

HessianPolicy HessianSpec::make() const {
  switch (kind) {
    case HessianPolicy::Kind::Constant: return HessianPolicy::constant(b);
    case HessianPolicy::Kind::PowerGrowth: return HessianPolicy::power_growth(mu1, mu2, p);
    case HessianPolicy::Kind::AdversarialPower: return HessianPolicy::adversarial_power(p);
  }
  throw InputError("unknown hessian kind");
}

ExperimentConfig parse_config(const json& doc) {
  reject_unknown(doc, {"problem", "params", "hessian", "subsolver", "bounds", "output"}, "config");
  ExperimentConfig cfg;

  if (doc.contains("problem")) {
    const json& pr = doc.at("problem");
    reject_unknown(pr, {"adversarial", "builtin"}, "problem");
    if (pr.contains("adversarial")) {
      const json& adv = pr.at("adversarial");
      reject_unknown(adv, {"epsilon", "p"}, "problem.adversarial");
      AdversarialSelection sel;
      read(adv, "epsilon", sel.epsilon);
      read(adv, "p", sel.p);
      cfg.adversarial = sel;
    }
    if (pr.contains("builtin")) {
      std::string name;
      read(pr, "builtin", name);
      cfg.builtin = name;
    }
  }

  if (doc.contains("params")) {
    const json& pa = doc.at("params");
    reject_unknown(pa,
                   {"eta1", "eta2", "gamma1", "gamma2", "gamma3", "gamma4", "delta0", "delta_max",
                    "alpha", "beta", "epsilon", "max_iter"},
                   "params");
    TRParams& p = cfg.params;
    read(pa, "eta1", p.eta1);
    read(pa, "eta2", p.eta2);
    read(pa, "gamma1", p.gamma1);
    read(pa, "gamma2", p.gamma2);
    read(pa, "gamma3", p.gamma3);
    read(pa, "gamma4", p.gamma4);
    read(pa, "delta0", p.delta0);
    read(pa, "delta_max", p.delta_max);
    read(pa, "alpha", p.alpha);
    read(pa, "beta", p.beta);
    read(pa, "max_iter", p.max_iter);
    if (pa.contains("epsilon")) {
      read(pa, "epsilon", p.epsilon);
      cfg.epsilon_given = true;
    }
  }

  if (doc.contains("hessian")) {
    const json& he = doc.at("hessian");
    reject_unknown(he, {"kind", "b", "mu1", "mu2", "p"}, "hessian");
    HessianSpec hs;
    std::string kind = "constant";
    read(he, "kind", kind);
    hs.kind = parse_kind(kind);
    read(he, "b", hs.b);
    read(he, "mu1", hs.mu1);
    read(he, "mu2", hs.mu2);
    read(he, "p", hs.p);
    cfg.hessian = hs;
  }

  if (doc.contains("subsolver")) {
    const json& su = doc.at("subsolver");
    reject_unknown(su, {"mode", "max_inner"}, "subsolver");
    if (su.contains("mode")) {
      std::string mode;
      read(su, "mode", mode);
      cfg.mode = parse_mode(mode);
    }
    read(su, "max_inner", cfg.max_inner);
  }

  if (doc.contains("bounds")) {
    const json& bo = doc.at("bounds");
    reject_unknown(bo, {"kappa_ubd", "f_low"}, "bounds");
    read(bo, "kappa_ubd", cfg.kappa_ubd);
    if (bo.contains("f_low")) {
      double v = 0.0;
      read(bo, "f_low", v);
      cfg.f_low = v;
    }
  }

  if (doc.contains("output")) {
    const json& ou = doc.at("output");
    reject_unknown(ou, {"out", "samples"}, "output");
    read(ou, "out", cfg.out);
    read(ou, "samples", cfg.samples);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

void ExperimentConfig::validate() const {
  if (adversarial && builtin) throw InputError("select either an adversarial or a builtin problem, not both");
  effective_params().validate();
  if (max_inner < 0) throw InputError("max_inner must be >= 0");
  if (samples < 2) throw InputError("samples must be >= 2");
  if (!(kappa_ubd > 0.0)) throw InputError("kappa_ubd must be positive");
  if (hessian) (void)hessian->make();
  if (adversarial) {
    if (epsilon_given && params.epsilon != adversarial->epsilon) {
      throw InputError("params.epsilon must equal the adversarial epsilon (the instance is built for it)");
    }
    const TRParams p = effective_params();
    if (p.delta0 != 1.0) throw InputError("the adversarial instance requires delta0 = 1");
    if (p.beta < 2.0 / p.alpha + 1.0) {
      std::ostringstream msg;
      msg << "adversarial runs require beta >= 2/alpha + 1 = " << 2.0 / p.alpha + 1.0
          << " (got beta = " << p.beta << ")";
      throw InputError(msg.str());
    }
  }
}

TRParams ExperimentConfig::effective_params() const {
  TRParams p = params;
  if (adversarial) p.epsilon = adversarial->epsilon;
  return p;
}

HessianPolicy ExperimentConfig::effective_policy() const {
  if (hessian) return hessian->make();
  if (adversarial) return HessianPolicy::adversarial_power(adversarial->p);
  return HessianPolicy::constant(1.0);
}

SubsolverMode ExperimentConfig::effective_mode() const {
  if (mode) return *mode;
  return adversarial ? SubsolverMode::Analytic : SubsolverMode::Iterative;
}

}  // namespace ubtr::cli
