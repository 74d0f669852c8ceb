#pragma once

#include "gyrostab/criteria.hpp"
#include "gyrostab/models.hpp"
#include "gyrostab/spectral.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace gyrostab {

using ParamMap = std::map<std::string, double>;

/// Bad model names, unknown or missing parameters, malformed grids.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values where finite results are required.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelInfo {
  std::string name;
  /// Primary parameter names (the CLI/config contract).
  std::vector<std::string> parameters;
  /// Alternative parameter spellings accepted instead (convenience forms).
  std::vector<std::string> optional;
  std::function<SystemMatrices(const ParamMap&)> build;
  /// Closed-form criterion margins evaluated alongside classify in sweeps.
  std::function<std::vector<std::pair<std::string, double>>(const ParamMap&)> margins;
};

const std::vector<ModelInfo>& model_registry();

/// Throws ConfigError listing the valid names when `name` is unknown.
const ModelInfo& find_model(const std::string& name);

/// All model names, comma separated (for error messages and help text).
std::string model_names();

/// Validates that `params` covers the model's parameters (accepting the
/// documented alternative forms) and contains nothing unknown.
void validate_params(const ModelInfo& model, const ParamMap& params);

BrouwerParams brouwer_from_map(const ParamMap& params);
ShiehMasurParams shieh_masur_from_map(const ParamMap& params);
BottemaParams bottema_from_map(const ParamMap& params);
HelicalQuadParams helical_quad_from_map(const ParamMap& params);
CholestericParams cholesteric_from_map(const ParamMap& params);
BenjaminFeirParams benjamin_feir_from_map(const ParamMap& params);

}  // namespace gyrostab
