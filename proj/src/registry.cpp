#include "gyrostab/registry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gyrostab {

namespace {

double get(const ParamMap& m, const std::string& key) {
  const auto it = m.find(key);
  if (it == m.end()) throw ConfigError("missing parameter: " + key);
  return it->second;
}

bool has(const ParamMap& m, const std::string& key) { return m.count(key) > 0; }

std::vector<std::pair<std::string, double>> brouwer_margins(const ParamMap& m) {
  return brouwer_marginal(brouwer_from_map(m)).margins;
}

std::vector<std::pair<std::string, double>> shieh_masur_margins(const ParamMap& m) {
  return lienard_chipart(shieh_masur_from_map(m)).margins;
}

std::vector<std::pair<std::string, double>> bottema_margins(const ParamMap& m) {
  // The damped-vessel system is the rotor model with delta1 = delta2 =
  // delta + nu_ext and positional coefficient nu_ext * omega.
  const BottemaParams p = bottema_from_map(m);
  const ShiehMasurParams eq{p.k1,           p.k2,
                            p.omega,        p.delta + p.nu_ext,
                            p.delta + p.nu_ext, p.nu_ext * p.omega};
  return lienard_chipart(eq).margins;
}

std::vector<std::pair<std::string, double>> helical_margins(const ParamMap& m) {
  const HelicalQuadParams p = helical_quad_from_map(m);
  return brouwer_marginal({-p.a, p.a, 0.5}).margins;
}

std::vector<std::pair<std::string, double>> cholesteric_margins(const ParamMap& m) {
  const CholestericParams p = cholesteric_from_map(m);
  return brouwer_marginal({p.k_sq * p.eps11, p.k_sq * p.eps22, p.alpha}).margins;
}

std::vector<std::pair<std::string, double>> benjamin_feir_margins(const ParamMap& m) {
  const SystemMatrices sys = build_benjamin_feir(benjamin_feir_from_map(m));
  const QuarticPoly p = characteristic_poly(sys);
  // Marginal-stability margins of the biquadratic: c2 > 0, c0 > 0 and a
  // positive discriminant keep both l^2 roots real negative.
  const double disc = p.c2 * p.c2 - 4.0 * p.c0;
  auto out = biquadratic_conditions(sys).margins;
  out.emplace_back("bq_c2", p.c2);
  out.emplace_back("bq_c0", p.c0);
  out.emplace_back("bq_disc", disc);
  return out;
}

}  // namespace

BrouwerParams brouwer_from_map(const ParamMap& m) {
  if (has(m, "g") || has(m, "r1") || has(m, "r2")) {
    return BrouwerParams::from_gravity(get(m, "g"), get(m, "r1"), get(m, "r2"),
                                       get(m, "omega"));
  }
  return {get(m, "k1"), get(m, "k2"), get(m, "omega")};
}

ShiehMasurParams shieh_masur_from_map(const ParamMap& m) {
  return {get(m, "k1"),     get(m, "k2"),     get(m, "omega"),
          get(m, "delta1"), get(m, "delta2"), get(m, "nu")};
}

BottemaParams bottema_from_map(const ParamMap& m) {
  return {get(m, "k1"), get(m, "k2"), get(m, "omega"), get(m, "delta"),
          get(m, "nu_ext")};
}

HelicalQuadParams helical_quad_from_map(const ParamMap& m) {
  if (has(m, "lambda_pitch") || has(m, "kSq")) {
    return HelicalQuadParams::from_pitch(get(m, "lambda_pitch"), get(m, "kSq"));
  }
  return {get(m, "a")};
}

CholestericParams cholesteric_from_map(const ParamMap& m) {
  return {get(m, "alpha"), get(m, "kSq"), get(m, "eps11"), get(m, "eps22")};
}

BenjaminFeirParams benjamin_feir_from_map(const ParamMap& m) {
  BenjaminFeirParams p;
  p.alpha_nls = get(m, "alpha_nls");
  p.gamma_nls = get(m, "gamma_nls");
  p.k = get(m, "k");
  p.sigma = get(m, "sigma");
  p.u0 = Vec2(get(m, "u0x"), get(m, "u0y"));
  return p;
}

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> registry = {
      {"brouwer",
       {"k1", "k2", "omega"},
       {"g", "r1", "r2"},
       [](const ParamMap& m) { return build_brouwer(brouwer_from_map(m)); },
       brouwer_margins},
      {"bottema",
       {"k1", "k2", "omega", "delta", "nu_ext"},
       {},
       [](const ParamMap& m) { return build_bottema(bottema_from_map(m)); },
       bottema_margins},
      {"shieh-masur",
       {"k1", "k2", "omega", "delta1", "delta2", "nu"},
       {},
       [](const ParamMap& m) { return build_shieh_masur(shieh_masur_from_map(m)); },
       shieh_masur_margins},
      {"helical-quad",
       {"a"},
       {"lambda_pitch", "kSq"},
       [](const ParamMap& m) { return build_helical_quad(helical_quad_from_map(m)); },
       helical_margins},
      {"cholesteric",
       {"alpha", "kSq", "eps11", "eps22"},
       {},
       [](const ParamMap& m) { return build_cholesteric(cholesteric_from_map(m)); },
       cholesteric_margins},
      {"benjamin-feir",
       {"alpha_nls", "gamma_nls", "k", "sigma", "u0x", "u0y"},
       {},
       [](const ParamMap& m) { return build_benjamin_feir(benjamin_feir_from_map(m)); },
       benjamin_feir_margins},
  };
  return registry;
}

std::string model_names() {
  std::string out;
  for (const auto& m : model_registry()) {
    if (!out.empty()) out += ", ";
    out += m.name;
  }
  return out;
}

const ModelInfo& find_model(const std::string& name) {
  for (const auto& m : model_registry())
    if (m.name == name) return m;
  throw ConfigError("unknown model '" + name + "'; valid models: " + model_names());
}

void validate_params(const ModelInfo& model, const ParamMap& params) {
  auto known = [&](const std::string& key) {
    return std::find(model.parameters.begin(), model.parameters.end(), key) !=
               model.parameters.end() ||
           std::find(model.optional.begin(), model.optional.end(), key) !=
               model.optional.end();
  };
  for (const auto& [key, value] : params) {
    if (!known(key)) {
      std::ostringstream msg;
      msg << "unknown parameter '" << key << "' for model '" << model.name
          << "'; valid parameters:";
      for (const auto& p : model.parameters) msg << " " << p;
      for (const auto& p : model.optional) msg << " " << p << "(alt)";
      throw ConfigError(msg.str());
    }
    if (!std::isfinite(value))
      throw ConfigError("parameter '" + key + "' is not finite");
  }
  // Presence is checked by the builders themselves (they know which
  // alternative forms substitute for which primaries).
  model.build(params);
}

}  // namespace gyrostab
