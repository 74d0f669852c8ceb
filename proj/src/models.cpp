#include "gyrostab/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrostab {

namespace {

const Mat2 kJ = (Mat2() << 0.0, -1.0, 1.0, 0.0).finished();

}  // namespace

BrouwerParams BrouwerParams::from_gravity(double g, double r1, double r2, double omega) {
  if (r1 == 0.0 || r2 == 0.0)
    throw std::invalid_argument("curvature radius must be nonzero");
  return {g / r1, g / r2, omega};
}

HelicalQuadParams HelicalQuadParams::from_pitch(double lambda_pitch, double k_sq) {
  const double pi = std::numbers::pi;
  return {-lambda_pitch * lambda_pitch * k_sq / (16.0 * pi * pi)};
}

SystemMatrices build_brouwer(const BrouwerParams& p) {
  const bool flipped = p.omega < 0.0;
  const double w = std::abs(p.omega);
  SystemMatrices sys;
  sys.a = Mat2::Zero();
  sys.a(0, 0) = p.k1 - w * w;
  sys.a(1, 1) = p.k2 - w * w;
  sys.b = 2.0 * w * kJ;
  sys.label = flipped ? "brouwer (omega<0 mapped to |omega|)" : "brouwer";
  return sys;
}

SystemMatrices build_shieh_masur(const ShiehMasurParams& p) {
  const double w = p.omega;
  SystemMatrices sys;
  sys.b = 2.0 * w * kJ;
  sys.b(0, 0) += p.delta1;
  sys.b(1, 1) += p.delta2;
  sys.a = p.nu * kJ;
  sys.a(0, 0) += p.k1 - w * w;
  sys.a(1, 1) += p.k2 - w * w;
  sys.label = "shieh-masur";
  return sys;
}

SystemMatrices build_bottema(const BottemaParams& p) {
  const double w = p.omega;
  SystemMatrices sys;
  sys.b = 2.0 * w * kJ;
  sys.b(0, 0) += p.delta + p.nu_ext;
  sys.b(1, 1) += p.delta + p.nu_ext;
  sys.a = p.nu_ext * w * kJ;
  sys.a(0, 0) += p.k1 - w * w;
  sys.a(1, 1) += p.k2 - w * w;
  sys.label = "bottema";
  return sys;
}

SystemMatrices build_helical_quad(const HelicalQuadParams& p) {
  SystemMatrices sys = build_brouwer({-p.a, p.a, 0.5});
  sys.label = "helical-quad (evolves in scaled axial distance)";
  return sys;
}

SystemMatrices build_cholesteric(const CholestericParams& p) {
  SystemMatrices sys =
      build_brouwer({p.k_sq * p.eps11, p.k_sq * p.eps22, p.alpha});
  sys.label = "cholesteric (evolves in axial distance)";
  return sys;
}

SystemMatrices build_benjamin_feir(const BenjaminFeirParams& p) {
  if (!(p.alpha_nls > 0.0))
    throw std::invalid_argument("benjamin-feir requires alpha_nls > 0");
  if (!(p.gamma_nls > 0.0))
    throw std::invalid_argument("benjamin-feir requires gamma_nls > 0");

  const double norm_sq = p.u0.squaredNorm();
  const double q = p.sigma * p.sigma * p.alpha_nls - p.gamma_nls * norm_sq;
  const Mat2 uu = p.u0 * p.u0.transpose();
  const Mat2 d = uu * kJ - kJ * uu;

  SystemMatrices sys;
  sys.b = 2.0 * q * kJ + 2.0 * p.gamma_nls * d;
  const double pos = 4.0 * p.alpha_nls * p.alpha_nls * p.k * p.k * p.sigma * p.sigma +
                     p.gamma_nls * p.gamma_nls * norm_sq * norm_sq - q * q;
  sys.a = pos * Mat2::Identity();
  sys.label = "benjamin-feir";
  return sys;
}

Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return (Mat2() << c, -s, s, c).finished();
}

Vec2 corotating_transform(const Vec2& z_lab, double angle) {
  return rotation(-angle) * z_lab;
}

Vec2 corotating_inverse(const Vec2& z_rot, double angle) {
  return rotation(angle) * z_rot;
}

Vec4 lab_to_corotating_state(const Vec4& lab, double angle, double rate) {
  const Mat2 r = rotation(-angle);
  const Vec2 pos = lab.head<2>();
  const Vec2 vel = lab.tail<2>();
  Vec4 out;
  out.head<2>() = r * pos;
  out.tail<2>() = r * vel - rate * (kJ * (r * pos));
  return out;
}

Vec4 corotating_to_lab_state(const Vec4& rot, double angle, double rate) {
  const Mat2 r = rotation(angle);
  const Vec2 pos = rot.head<2>();
  const Vec2 vel = rot.tail<2>();
  Vec4 out;
  out.head<2>() = r * pos;
  out.tail<2>() = r * vel + rate * (kJ * (r * pos));
  return out;
}

}  // namespace gyrostab
