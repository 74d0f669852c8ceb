#pragma once

#include "gyrostab/models.hpp"
#include "gyrostab/spectral.hpp"

#include <utility>

namespace gyrostab {

/// Signed-margin report for a closed-form criterion. Positive margins mean
/// the corresponding inequality is satisfied; `satisfied` holds iff every
/// margin is strictly positive. `extras` carries auxiliary values that are
/// not margins (growth rates, raw traces).
struct CriterionReport {
  std::string name;
  std::vector<std::pair<std::string, double>> margins;
  std::vector<std::pair<std::string, double>> extras;
  bool satisfied = false;

  double min_margin() const;
};

CriterionReport make_report(std::string name,
                            std::vector<std::pair<std::string, double>> margins,
                            std::vector<std::pair<std::string, double>> extras = {});

/// Marginal-stability conditions of the undamped rotating vessel:
///   m1 = (k1-w^2)(k2-w^2),  m2 = k1+k2+2w^2,  m3 = (k1-k2)^2 + 8w^2(k1+k2).
CriterionReport brouwer_marginal(const BrouwerParams& p);

/// Lienard-Chipart asymptotic-stability conditions for the damped rotor
/// quartic: p1, p2, p4 and the Hurwitz determinant H3.
CriterionReport lienard_chipart(const ShiehMasurParams& p);

/// Conditions under which the characteristic quartic is biquadratic:
/// tr B = 0 and tr AB = 0. Margins are tolerance minus the offending
/// magnitude (positive = condition holds); extras expose the raw traces and
/// the symmetric/skew split tr(BsAs) + tr(BaAa).
CriterionReport biquadratic_conditions(const SystemMatrices& sys);

struct PureImaginaryWindow {
  double delta_d = 0.0;  // double-zero location in delta1
  double kappa_d = 0.0;  // stiffness-difference bound
  std::array<double, 2> negative_branch{};  // [-2w, 0)
  std::array<double, 2> positive_branch{};  // (delta_d, 2w]
};

/// Window of damping delta1 along the constraint set delta2 = -delta1,
/// kappa = -4 w nu / delta1 on which the whole spectrum is pure imaginary.
/// Requires k1 > omega^2 and nu > 0; throws std::domain_error naming the
/// violated inequality otherwise.
PureImaginaryWindow pure_imaginary_window(double k1, double omega, double nu);

enum class DegeneracyKind { EpImaginaryPair, DoubleZero };

struct ExceptionalPoint {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double kappa = 0.0;
  Complex eigenvalue;
  DegeneracyKind kind = DegeneracyKind::EpImaginaryPair;
  /// False when k1 - omega^2 - nu < 0 pushes the double eigenvalue off the
  /// imaginary axis; the point is still returned, flagged.
  bool pure_imaginary = true;
};

/// The two exceptional points (+-2w, -+2w, +-2nu) with their double
/// eigenvalues +-i sqrt(k1 - w^2 +- nu), plus the double-zero point
/// (delta_d, -delta_d, kappa_d). Same preconditions as
/// pure_imaginary_window.
std::vector<ExceptionalPoint> exceptional_points(double k1, double omega, double nu);

/// Constrained (single-axis) rotor threshold: margin k1 - omega^2. When
/// unstable the growth rate sqrt(omega^2 - k1) is reported in extras.
CriterionReport rankine_threshold(double k1, double omega);

/// Instability interval (sqrt(1-eps), sqrt(1+eps)) of the normalized
/// detuned rotor k1 = 1+eps, k2 = 1-eps. Requires 0 <= eps < 1.
std::pair<double, double> bubble_interval(double epsilon);

}  // namespace gyrostab
