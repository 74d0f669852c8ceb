#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace gyrostab {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Complex = std::complex<double>;

/// Second-order system z'' + B z' + A z = 0 with real 2x2 coefficient
/// matrices: A positional forces (1/time^2), B velocity forces (1/time).
struct SystemMatrices {
  Mat2 a = Mat2::Zero();
  Mat2 b = Mat2::Zero();
  std::string label;

  Mat2 a_symmetric() const { return 0.5 * (a + a.transpose()); }
  Mat2 a_skew() const { return 0.5 * (a - a.transpose()); }
  Mat2 b_symmetric() const { return 0.5 * (b + b.transpose()); }
  Mat2 b_skew() const { return 0.5 * (b - b.transpose()); }
  bool finite() const;
};

/// Monic quartic  l^4 + c3 l^3 + c2 l^2 + c1 l + c0  with real coefficients.
struct QuarticPoly {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  Complex eval(Complex x) const;
  Complex deriv(Complex x) const;
  /// max(1, max |ci|); the coefficient part of residual scales.
  double coeff_scale() const;
};

/// Characteristic polynomial of z'' + Bz' + Az = 0:
///   l^4 + tr(B) l^3 + (tr(A)+det(B)) l^2 + (tr(A)tr(B)-tr(AB)) l + det(A).
QuarticPoly characteristic_poly(const SystemMatrices& sys);

/// First-order form [[0, I], [-A, -B]] acting on (z, z').
Mat4 first_order_matrix(const SystemMatrices& sys);

/// Discriminant of the monic quartic (zero iff a repeated root exists).
double quartic_discriminant(const QuarticPoly& p);

struct RootCluster {
  Complex center;             // mean of member roots
  std::vector<int> members;   // indices into Spectrum::roots
  int algebraic = 0;
  int geometric = 0;
  bool on_axis = false;       // center inside the imaginary-axis band
  bool borderline = false;    // rank test had a singular value near threshold
};

struct Spectrum {
  std::array<Complex, 4> roots{};
  std::vector<RootCluster> clusters;  // empty for raw solver output

  double spectral_radius() const;
  double max_real_part() const;
};

/// Ferrari resolvent-cubic closed form with a biquadratic fast path and a
/// fixed number of guarded Newton polishing steps. The fast path used in
/// sweeps.
Spectrum solve_quartic_closed_form(const QuarticPoly& p);

/// Eigenvalues of the balanced 4x4 companion matrix. Independent oracle
/// path for cross-validation.
Spectrum solve_quartic_companion(const QuarticPoly& p);

enum class StabilityClass {
  AsymptoticallyStable,
  MarginallyStable,
  DivergenceUnstable,
  FlutterUnstable,
  NonSemisimpleAxisUnstable,
};

const char* to_string(StabilityClass c);

/// Stable numeric codes for serialized grids: 0 asymptotic, 1 marginal,
/// 2 divergence, 3 flutter, 4 non-semisimple axis.
int verdict_code(StabilityClass c);

struct Tolerances {
  double axis_band = 1e-8;       // scaled by (1 + spectral radius)
  double cluster_radius = 1e-6;  // scaled by (1 + spectral radius)
  double rank_threshold = 1e-9;  // scaled by ||C||_F
};

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::MarginallyStable;
  double max_real_part = 0.0;
  std::map<std::string, double> diagnostics;
  bool borderline = false;
};

/// Cluster numerically coincident roots and compute per-cluster geometric
/// multiplicity as 4 - rank(C - lambda I) (singular-value rank test).
Spectrum cluster_spectrum(const std::array<Complex, 4>& roots, const Mat4& c,
                          const Tolerances& tol = {});

StabilityVerdict classify_spectrum(const Spectrum& spec, const Tolerances& tol = {});

StabilityVerdict classify(const SystemMatrices& sys, const Tolerances& tol = {});

/// classify() plus the clustered spectrum it used.
std::pair<Spectrum, StabilityVerdict> analyze(const SystemMatrices& sys,
                                              const Tolerances& tol = {});

}  // namespace gyrostab
