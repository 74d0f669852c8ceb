#pragma once

#include "gyrostab/registry.hpp"
#include "gyrostab/spectral.hpp"

#include <array>
#include <functional>
#include <optional>

namespace gyrostab {

struct GridAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct GridSpec {
  std::string model;
  std::vector<GridAxis> axes;       // 1..3 swept axes, declared order
  ParamMap fixed;                   // remaining parameters

  /// Grid coordinate of index i along axis a (endpoints exact).
  double coordinate(std::size_t axis, int i) const;
  std::size_t point_count() const;
  void validate() const;            // throws ConfigError
};

/// Dense grid of verdicts and scalar channels in row-major order with the
/// first declared axis slowest.
struct SweepResult {
  GridSpec spec;
  std::vector<int> verdicts;                      // verdict_code per point
  std::vector<std::string> channel_names;        // "max_real_part", margins...
  std::vector<std::vector<double>> channels;     // one vector per channel

  const std::vector<double>& channel(const std::string& name) const;
};

SweepResult sweep(const GridSpec& spec, const Tolerances& tol = {});

struct Polyline {
  std::string channel;
  std::vector<std::array<double, 2>> points;
};

struct ContourSet {
  std::vector<Polyline> lines;
};

/// Marching squares on a raw 2-D scalar grid. `center_eval`, when given,
/// resolves saddle cells from the true field value at the cell center;
/// otherwise the corner average decides.
ContourSet contour_grid(const std::vector<double>& values, const GridAxis& x,
                        const GridAxis& y, const std::string& channel_name,
                        const std::function<double(double, double)>& center_eval = {});

/// Zero level set of a named margin channel of a 2-D sweep. Saddle cells
/// are resolved by re-evaluating the margin at the cell center.
ContourSet extract_contours(const SweepResult& result, const std::string& channel);

/// Cusp corners A, B and the cylinder intersection C of the rotating-vessel
/// stability boundary at fixed omega:
///   A = (w^2, -3w^2), B = (-3w^2, w^2), C = (w^2, w^2).
std::array<std::array<double, 2>, 3> brouwer_cusps(double omega);

/// Whirl-frequency surface residual, as printed:
///   ((Im l)^2 - 1 - w^2)^2 - 4 w^2 - eps^2.
double whirl_residual(double im_lambda, double omega, double epsilon);
/// Alternative reading with the 4 w^2 (Im l)^2 cross term.
double whirl_residual_alt(double im_lambda, double omega, double epsilon);

/// Growth-rate surface residual, as printed:
///   ((Re l)^2 + 1 + w^2)^2 - 4 w^2 - eps^2.
double growth_residual(double re_lambda, double omega, double epsilon);
double growth_residual_alt(double re_lambda, double omega, double epsilon);

/// Empirical certification of the two printed residual forms against
/// computed eigenvalues of the detuned rotor k1 = 1+eps, k2 = 1-eps over an
/// (omega, eps) grid: evaluates the whirl forms at pure imaginary roots and
/// the growth forms at real roots, and keeps the worst |residual| of each.
struct ResidualCertification {
  double max_whirl = 0.0;
  double max_whirl_alt = 0.0;
  double max_growth = 0.0;
  double max_growth_alt = 0.0;
  bool printed_forms_certified = false;  // both printed maxima <= tolerance
};

ResidualCertification certify_residual_forms(int omega_count, int eps_count,
                                             double omega_max = 2.0,
                                             double eps_max = 0.5,
                                             double tolerance = 1e-9);

struct ViaductSlice {
  SweepResult grid;
  ContourSet contours;  // H3 and p4 zero sets
};

/// Slice of the damped-rotor stability boundary in the (delta1, delta2)
/// plane at fixed stiffness difference kappa = k2 - k1.
ViaductSlice viaduct_slice(double kappa, double k1, double omega, double nu,
                           std::array<double, 2> delta1_range,
                           std::array<double, 2> delta2_range, int count);

/// The two self-intersection branches (delta1, -delta1, -4 w nu / delta1) of
/// the H3 = 0 surface, sampled over the pure-imaginary window. Branch one
/// runs from delta1 = -2w toward 0 (exclusive); branch two from delta_d to
/// 2w (inclusive). Endpoints coincide with the exceptional points and the
/// double-zero point.
std::vector<std::vector<std::array<double, 3>>> self_intersection_curve(
    double k1, double omega, double nu, int samples_per_branch);

}  // namespace gyrostab
