#pragma once

#include "gyrostab/models.hpp"
#include "gyrostab/spectral.hpp"

namespace gyrostab {

enum class Frame { Lab, Corotating };

struct Trajectory {
  double dt = 0.0;                // uniform sample spacing
  std::vector<double> times;      // evolution variable (time or distance)
  std::vector<Vec4> states;       // (position pair, velocity pair)
  std::string label;
  Frame frame = Frame::Corotating;
  bool overflow = false;          // truncated at the last finite sample

  std::size_t size() const { return states.size(); }
};

/// Exact propagation of z'' + Bz' + Az = 0: one matrix exponential of the
/// first-order matrix times dt, applied repeatedly. No integrator error
/// beyond the exponential itself.
Trajectory integrate_autonomous(const SystemMatrices& sys, const Vec4& x0,
                                double t_end, double dt);

/// Constrained single-axis rotor x'' + (k1 - w^2) x = 0, embedded as a
/// decoupled system so the trajectory keeps the 4-state layout (y stays 0).
Trajectory integrate_rankine(double k1, double omega, double x, double v,
                             double t_end, double dt);

/// Lab-frame helical-lens equations (z-periodic coefficients), classical
/// fixed-step 4th-order integration. The internal step is halved until the
/// endpoint moves by less than 1e-8 relative; samples land on multiples of
/// dz.
Trajectory integrate_helical_lab(const HelicalQuadParams& p, const Vec4& x0,
                                 double z_end, double dz);

/// Lab-frame polarization transport F'' + kSq * eps(z) F = 0 of the
/// time-harmonic ansatz, same stepping scheme.
Trajectory integrate_cholesteric_lab(const CholestericParams& p, const Vec4& f0,
                                     double z_end, double dz);

/// Map a lab-frame trajectory into the frame rotating at `rate` (angle =
/// rate * tau), including the rotation-rate term on velocities.
Trajectory to_corotating(const Trajectory& lab, double rate);

struct GrowthEstimate {
  double rate = 0.0;          // least-squares slope of log ||x|| (1/time)
  double fit_residual = 0.0;  // RMS deviation from the linear fit
  double t_start = 0.0;       // fitted window
  double t_end = 0.0;
  bool oscillation_dominated = false;
};

/// Least-squares slope of log ||x(t)|| over the trailing half of the
/// trajectory. Requires at least 100 samples.
GrowthEstimate measure_growth_rate(const Trajectory& traj);

}  // namespace gyrostab
