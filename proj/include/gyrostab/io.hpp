#pragma once

#include "gyrostab/registry.hpp"
#include "gyrostab/spectral.hpp"
#include "gyrostab/surfaces.hpp"
#include "gyrostab/timesim.hpp"

#include "json.hpp"

#include <string>

namespace gyrostab::io {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Temp file + rename; the target never holds a partial write.
void atomic_write(const std::string& path, const std::string& content);

nlohmann::json spectrum_json(const Spectrum& spec);
nlohmann::json verdict_json(const StabilityVerdict& verdict);

nlohmann::json classify_document(const std::string& model, const ParamMap& params,
                                 const SystemMatrices& sys, const QuarticPoly& poly,
                                 const Spectrum& spec, const StabilityVerdict& verdict,
                                 const std::vector<std::pair<std::string, double>>& margins);
std::string classify_csv(const std::string& model, const ParamMap& params,
                         const QuarticPoly& poly, const Spectrum& spec,
                         const StabilityVerdict& verdict,
                         const std::vector<std::pair<std::string, double>>& margins);

nlohmann::json sweep_document(const SweepResult& result);
std::string sweep_csv(const SweepResult& result);

nlohmann::json contours_document(const ContourSet& contours);

nlohmann::json trajectory_document(const Trajectory& traj);
std::string trajectory_csv(const Trajectory& traj);
nlohmann::json growth_summary(const GrowthEstimate& est, double max_real_part,
                              const Trajectory& traj);

nlohmann::json special_points_document(double k1, double omega, double nu);

}  // namespace gyrostab::io
