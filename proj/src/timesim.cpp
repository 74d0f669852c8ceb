#include "gyrostab/timesim.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace gyrostab {

namespace {

int sample_count(double t_end, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("requires dt > 0");
  if (!(t_end >= dt)) throw std::invalid_argument("requires t_end >= dt");
  return static_cast<int>(std::floor(t_end / dt + 1e-9)) + 1;
}

}  // namespace

Trajectory integrate_autonomous(const SystemMatrices& sys, const Vec4& x0,
                                double t_end, double dt) {
  const int n = sample_count(t_end, dt);
  const Mat4 c = first_order_matrix(sys);
  const Mat4 step = (c * dt).exp();

  Trajectory traj;
  traj.dt = dt;
  traj.label = sys.label;
  traj.frame = Frame::Corotating;
  traj.times.reserve(n);
  traj.states.reserve(n);

  Vec4 x = x0;
  for (int i = 0; i < n; ++i) {
    if (!x.allFinite()) {
      traj.overflow = true;
      break;
    }
    traj.times.push_back(i * dt);
    traj.states.push_back(x);
    x = step * x;
  }
  return traj;
}

Trajectory integrate_rankine(double k1, double omega, double x, double v,
                             double t_end, double dt) {
  SystemMatrices sys;
  sys.a = Mat2::Zero();
  sys.a(0, 0) = k1 - omega * omega;
  sys.a(1, 1) = 1.0;  // dummy decoupled mode, never excited
  sys.b = Mat2::Zero();
  sys.label = "rankine-1dof";
  return integrate_autonomous(sys, Vec4(x, 0.0, v, 0.0), t_end, dt);
}

namespace {

template <typename Rhs>
Vec4 rk4_step(const Rhs& rhs, double z, const Vec4& s, double h) {
  const Vec4 k1 = rhs(z, s);
  const Vec4 k2 = rhs(z + 0.5 * h, s + 0.5 * h * k1);
  const Vec4 k3 = rhs(z + 0.5 * h, s + 0.5 * h * k2);
  const Vec4 k4 = rhs(z + h, s + h * k3);
  return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Fixed-step RK4 with samples on multiples of dz. The substep count per
// sample doubles until the endpoint is converged to 1e-8 relative.
template <typename Rhs>
Trajectory integrate_periodic(const Rhs& rhs, const Vec4& x0, double z_end, double dz,
                              std::string label) {
  const int n = sample_count(z_end, dz);

  auto endpoint = [&](int substeps) {
    Vec4 s = x0;
    double z = 0.0;
    const double h = dz / substeps;
    for (int i = 1; i < n; ++i) {
      for (int k = 0; k < substeps; ++k) {
        s = rk4_step(rhs, z, s, h);
        z += h;
      }
      if (!s.allFinite()) break;
    }
    return s;
  };

  int substeps = 1;
  Vec4 prev = endpoint(substeps);
  for (; substeps <= (1 << 16); substeps *= 2) {
    const Vec4 next = endpoint(substeps * 2);
    const double scale = 1.0 + next.norm();
    if (!next.allFinite() || (next - prev).norm() <= 1e-8 * scale) {
      substeps *= 2;
      break;
    }
    prev = next;
  }

  Trajectory traj;
  traj.dt = dz;
  traj.label = std::move(label);
  traj.frame = Frame::Lab;
  traj.times.reserve(n);
  traj.states.reserve(n);

  Vec4 s = x0;
  double z = 0.0;
  const double h = dz / substeps;
  for (int i = 0; i < n; ++i) {
    if (!s.allFinite()) {
      traj.overflow = true;
      break;
    }
    traj.times.push_back(i * dz);
    traj.states.push_back(s);
    for (int k = 0; k < substeps; ++k) {
      s = rk4_step(rhs, z, s, h);
      z += h;
    }
  }
  return traj;
}

}  // namespace

Trajectory integrate_helical_lab(const HelicalQuadParams& p, const Vec4& x0,
                                 double z_end, double dz) {
  const double a = p.a;
  auto rhs = [a](double z, const Vec4& s) {
    const double c = std::cos(z), sn = std::sin(z);
    Vec4 d;
    d(0) = s(2);
    d(1) = s(3);
    d(2) = a * (s(0) * c + s(1) * sn);
    d(3) = a * (s(0) * sn - s(1) * c);
    return d;
  };
  return integrate_periodic(rhs, x0, z_end, dz, "helical-quad lab frame");
}

Trajectory integrate_cholesteric_lab(const CholestericParams& p, const Vec4& f0,
                                     double z_end, double dz) {
  const double alpha = p.alpha, k_sq = p.k_sq;
  const Mat2 k = (Mat2() << p.eps11, 0.0, 0.0, p.eps22).finished();
  auto rhs = [alpha, k_sq, k](double z, const Vec4& s) {
    const Mat2 r = rotation(alpha * z);
    const Mat2 eps = r * k * r.transpose();
    const Vec2 acc = -k_sq * (eps * s.head<2>());
    Vec4 d;
    d.head<2>() = s.tail<2>();
    d.tail<2>() = acc;
    return d;
  };
  return integrate_periodic(rhs, f0, z_end, dz,
                            "cholesteric lab frame (time-harmonic reduction)");
}

Trajectory to_corotating(const Trajectory& lab, double rate) {
  Trajectory out = lab;
  out.frame = Frame::Corotating;
  for (std::size_t i = 0; i < lab.states.size(); ++i)
    out.states[i] = lab_to_corotating_state(lab.states[i], rate * lab.times[i], rate);
  return out;
}

GrowthEstimate measure_growth_rate(const Trajectory& traj) {
  if (traj.size() < 100)
    throw std::invalid_argument("growth estimate requires at least 100 samples");

  const std::size_t begin = traj.size() / 2;
  GrowthEstimate est;
  est.t_start = traj.times[begin];
  est.t_end = traj.times.back();

  // Least squares of log ||x|| against t over the trailing half.
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  std::size_t m = 0;
  for (std::size_t i = begin; i < traj.size(); ++i) {
    const double norm = traj.states[i].norm();
    if (norm <= 0.0) continue;
    const double t = traj.times[i], y = std::log(norm);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    ++m;
  }
  if (m < 2) {
    est.oscillation_dominated = true;
    return est;
  }
  const double denom = m * stt - st * st;
  est.rate = (m * sty - st * sy) / denom;
  const double intercept = (sy - est.rate * st) / m;

  double ss = 0.0;
  for (std::size_t i = begin; i < traj.size(); ++i) {
    const double norm = traj.states[i].norm();
    if (norm <= 0.0) continue;
    const double r = std::log(norm) - (intercept + est.rate * traj.times[i]);
    ss += r * r;
  }
  est.fit_residual = std::sqrt(ss / m);

  // Flag windows whose fitted total growth is small against the scatter.
  const double window = est.t_end - est.t_start;
  est.oscillation_dominated =
      est.fit_residual > 0.01 && std::abs(est.rate) * window < 4.0 * est.fit_residual;
  return est;
}

}  // namespace gyrostab
