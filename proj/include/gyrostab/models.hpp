#pragma once

#include "gyrostab/spectral.hpp"

namespace gyrostab {

/// Rotating-vessel parameters: curvature stiffnesses k1, k2 (1/time^2) and
/// rotation speed omega (1/time). k1, k2 may take either sign (concave or
/// saddle surface). Negative omega is mapped to |omega| by the builder; the
/// stability domain is symmetric in the sign of the rotation.
struct BrouwerParams {
  double k1 = 0.0;
  double k2 = 0.0;
  double omega = 0.0;

  /// Convenience: k = g / r from gravity and the two curvature radii.
  static BrouwerParams from_gravity(double g, double r1, double r2, double omega);
};

/// Rotor on a flexible shaft: independent damping delta1, delta2 and
/// non-conservative positional coefficient nu (matrix nu*J).
struct ShiehMasurParams {
  double k1 = 0.0;
  double k2 = 0.0;
  double omega = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double nu = 0.0;
};

/// Damped rotating vessel: internal damping delta, external damping nu_ext.
/// nu_ext enters both the isotropic damping diag(delta+nu, delta+nu) and the
/// positional term nu * (omega J), implemented literally.
struct BottemaParams {
  double k1 = 0.0;
  double k2 = 0.0;
  double omega = 0.0;
  double delta = 0.0;
  double nu_ext = 0.0;
};

/// Helical quadrupole lens, focusing strength a in scaled axial distance.
struct HelicalQuadParams {
  double a = 0.0;

  /// a = -lambda^2 k^2 / (16 pi^2) from the pitch and field strength.
  static HelicalQuadParams from_pitch(double lambda_pitch, double k_sq);
};

/// Cholesteric liquid crystal: helix wavenumber alpha = 2 pi / pitch,
/// k_sq = omega^2/c^2, principal dielectric constants eps11, eps22.
struct CholestericParams {
  double alpha = 0.0;
  double k_sq = 0.0;
  double eps11 = 0.0;
  double eps22 = 0.0;
};

/// Linearized NLS modulation modes. alpha_nls and gamma_nls must be
/// positive; k is the carrier wavenumber, sigma the modulation wavenumber,
/// u0 the carrier amplitude vector.
struct BenjaminFeirParams {
  double alpha_nls = 1.0;
  double gamma_nls = 1.0;
  double k = 0.0;
  double sigma = 0.0;
  Vec2 u0 = Vec2::Zero();
};

SystemMatrices build_brouwer(const BrouwerParams& p);

/// B = diag(d1,d2) + 2*omega*J,  A = diag(k1-w^2, k2-w^2) + nu*J.
SystemMatrices build_shieh_masur(const ShiehMasurParams& p);

/// B = (delta+nu)I + 2*omega*J,  A = diag(k1-w^2, k2-w^2) + nu*omega*J.
SystemMatrices build_bottema(const BottemaParams& p);

/// Rotating-frame lens equations: Brouwer with omega = 1/2, k1 = -a, k2 = a.
SystemMatrices build_helical_quad(const HelicalQuadParams& p);

/// Polarization transport: Brouwer with omega = alpha, k_i = k_sq * eps_ii.
/// Evolution variable is axial distance, not time.
SystemMatrices build_cholesteric(const CholestericParams& p);

/// Gyroscopic form of the modulation equations: B = 2qJ + 2*gamma*D,
/// A = (4 a^2 k^2 s^2 + g^2 |u0|^4 - q^2) I, with q = s^2 a - g |u0|^2 and
/// the traceless indefinite matrix D = u0 u0^T J - J u0 u0^T.
/// Throws std::invalid_argument unless alpha_nls > 0 and gamma_nls > 0.
SystemMatrices build_benjamin_feir(const BenjaminFeirParams& p);

/// Rotation matrix with the given angle.
Mat2 rotation(double angle);

/// Lab -> co-rotating frame: applies R(-angle).
Vec2 corotating_transform(const Vec2& z_lab, double angle);
Vec2 corotating_inverse(const Vec2& z_rot, double angle);

/// Full state (position pair, velocity pair) between frames. The frame
/// rotates with angle = rate * tau; velocities pick up the rotation-rate
/// term from the chain rule.
Vec4 lab_to_corotating_state(const Vec4& lab, double angle, double rate);
Vec4 corotating_to_lab_state(const Vec4& rot, double angle, double rate);

}  // namespace gyrostab
