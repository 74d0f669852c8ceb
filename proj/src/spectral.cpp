#include "gyrostab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gyrostab {

bool SystemMatrices::finite() const {
  return a.allFinite() && b.allFinite();
}

Complex QuarticPoly::eval(Complex x) const {
  return (((x + c3) * x + c2) * x + c1) * x + c0;
}

Complex QuarticPoly::deriv(Complex x) const {
  return ((4.0 * x + 3.0 * c3) * x + 2.0 * c2) * x + c1;
}

double QuarticPoly::coeff_scale() const {
  return std::max({1.0, std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
}

QuarticPoly characteristic_poly(const SystemMatrices& sys) {
  const double tr_a = sys.a.trace();
  const double tr_b = sys.b.trace();
  const double det_a = sys.a.determinant();
  const double det_b = sys.b.determinant();
  const double tr_ab = (sys.a * sys.b).trace();
  return {tr_b, tr_a + det_b, tr_a * tr_b - tr_ab, det_a};
}

Mat4 first_order_matrix(const SystemMatrices& sys) {
  Mat4 c = Mat4::Zero();
  c.block<2, 2>(0, 2) = Mat2::Identity();
  c.block<2, 2>(2, 0) = -sys.a;
  c.block<2, 2>(2, 2) = -sys.b;
  return c;
}

double quartic_discriminant(const QuarticPoly& p) {
  const double b = p.c3, c = p.c2, d = p.c1, e = p.c0;
  return 256.0 * e * e * e - 192.0 * b * d * e * e - 128.0 * c * c * e * e +
         144.0 * c * d * d * e - 27.0 * d * d * d * d + 144.0 * b * b * c * e * e -
         6.0 * b * b * d * d * e - 80.0 * b * c * c * d * e + 18.0 * b * c * d * d * d +
         16.0 * c * c * c * c * e - 4.0 * c * c * c * d * d - 27.0 * b * b * b * b * e * e +
         18.0 * b * b * b * c * d * e - 4.0 * b * b * b * d * d * d -
         4.0 * b * b * c * c * c * e + b * b * c * c * d * d;
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (const auto& z : roots) r = std::max(r, std::abs(z));
  return r;
}

double Spectrum::max_real_part() const {
  double m = roots[0].real();
  for (const auto& z : roots) m = std::max(m, z.real());
  return m;
}

namespace {

// Roots of x^2 + b x + c with real b, c. Real pairs come out with exactly
// zero imaginary part, complex pairs as exact conjugates.
std::array<Complex, 2> solve_quadratic(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(s, b));
    if (q != 0.0) return {Complex(q, 0.0), Complex(c / q, 0.0)};
    return {Complex(0.0, 0.0), Complex(-b, 0.0)};
  }
  const double s = 0.5 * std::sqrt(-disc);
  return {Complex(-0.5 * b, s), Complex(-0.5 * b, -s)};
}

// Largest real root of m^3 + a m^2 + b m + c.
double cubic_largest_real_root(double a, double b, double c) {
  const double shift = -a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double disc = 0.25 * q * q + p * p * p / 27.0;
  if (disc >= 0.0) {
    const double sd = std::sqrt(disc);
    // Pick the branch that avoids cancellation, recover the partner from
    // u*v = -p/3.
    const double t = (q >= 0.0) ? (-0.5 * q - sd) : (-0.5 * q + sd);
    const double u = std::cbrt(t);
    const double s = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
    return s + shift;
  }
  // Three real roots: trigonometric form.
  const double mag = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (p * mag), -1.0, 1.0);
  const double theta = std::acos(arg);
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    const double s = mag * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0);
    best = std::max(best, s + shift);
  }
  return best;
}

std::array<Complex, 4> biquadratic_roots(double p, double r) {
  const auto mu = solve_quadratic(p, r);
  std::array<Complex, 4> y;
  for (int i = 0; i < 2; ++i) {
    const Complex s = std::sqrt(mu[i]);
    y[2 * i] = s;
    y[2 * i + 1] = -s;
  }
  return y;
}

}  // namespace

Spectrum solve_quartic_closed_form(const QuarticPoly& poly) {
  const double c3 = poly.c3, c2 = poly.c2, c1 = poly.c1, c0 = poly.c0;

  // Depressed form y^4 + P y^2 + Q y + R with lambda = y - c3/4.
  const double P = c2 - 3.0 * c3 * c3 / 8.0;
  const double Q = c1 - 0.5 * c3 * c2 + c3 * c3 * c3 / 8.0;
  const double R =
      c0 - 0.25 * c3 * c1 + c3 * c3 * c2 / 16.0 - 3.0 * c3 * c3 * c3 * c3 / 256.0;

  std::array<Complex, 4> y;
  const double q_scale = std::max({1.0, std::abs(P), std::abs(R)});
  if (std::abs(Q) <= 1e-14 * q_scale) {
    y = biquadratic_roots(P, R);
  } else {
    // Resolvent cubic m^3 + P m^2 + (P^2/4 - R) m - Q^2/8 = 0; its largest
    // root is positive whenever Q != 0.
    double m = cubic_largest_real_root(P, 0.25 * P * P - R, -Q * Q / 8.0);
    if (!(m > 0.0)) {
      y = biquadratic_roots(P, R);
    } else {
      const double u = std::sqrt(2.0 * m);
      const double t = Q / (2.0 * u);
      const auto ya = solve_quadratic(u, 0.5 * P + m - t);
      const auto yb = solve_quadratic(-u, 0.5 * P + m + t);
      y = {ya[0], ya[1], yb[0], yb[1]};
    }
  }

  Spectrum spec;
  const double shift = c3 / 4.0;
  for (int i = 0; i < 4; ++i) spec.roots[i] = y[i] - shift;

  // Fixed number of Newton steps; skipped near multiple roots where the
  // derivative underflows the working scale and the step is pure noise.
  const double cs = poly.coeff_scale();
  for (auto& r : spec.roots) {
    for (int it = 0; it < 3; ++it) {
      const double rm = std::max(1.0, std::abs(r));
      const double deriv_scale = 4.0 * cs * rm * rm * rm;
      const Complex dv = poly.deriv(r);
      if (std::abs(dv) < 1e-5 * deriv_scale) break;
      r -= poly.eval(r) / dv;
    }
  }
  return spec;
}

namespace {

// Parlett-Reinsch style balancing; the companion matrix is far from
// symmetric when coefficients span magnitudes.
void balance_in_place(Mat4& m) {
  const double gamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < 4; ++i) {
      const double row_norm = m.row(i).lpNorm<1>();
      const double col_norm = m.col(i).lpNorm<1>();
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent != 0) {
        const double scaled_col = std::ldexp(col_norm, exponent);
        const double scaled_row = std::ldexp(row_norm, -exponent);
        if (scaled_col + scaled_row < gamma * (col_norm + row_norm)) {
          changed = true;
          m.row(i) *= std::ldexp(1.0, -exponent);
          m.col(i) *= std::ldexp(1.0, exponent);
        }
      }
    }
  }
}

}  // namespace

Spectrum solve_quartic_companion(const QuarticPoly& poly) {
  Mat4 c = Mat4::Zero();
  c(1, 0) = c(2, 1) = c(3, 2) = 1.0;
  c(0, 3) = -poly.c0;
  c(1, 3) = -poly.c1;
  c(2, 3) = -poly.c2;
  c(3, 3) = -poly.c3;
  balance_in_place(c);

  Eigen::EigenSolver<Mat4> es(c, /*computeEigenvectors=*/false);
  Spectrum spec;
  for (int i = 0; i < 4; ++i) spec.roots[i] = es.eigenvalues()(i);
  return spec;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::AsymptoticallyStable: return "AsymptoticallyStable";
    case StabilityClass::MarginallyStable: return "MarginallyStable";
    case StabilityClass::DivergenceUnstable: return "DivergenceUnstable";
    case StabilityClass::FlutterUnstable: return "FlutterUnstable";
    case StabilityClass::NonSemisimpleAxisUnstable: return "NonSemisimpleAxisUnstable";
  }
  return "?";
}

int verdict_code(StabilityClass c) { return static_cast<int>(c); }

Spectrum cluster_spectrum(const std::array<Complex, 4>& roots, const Mat4& c,
                          const Tolerances& tol) {
  Spectrum spec;
  spec.roots = roots;

  const double rho = spec.spectral_radius();
  const double radius = tol.cluster_radius * (1.0 + rho);
  const double band = tol.axis_band * (1.0 + rho);

  // Single-linkage clustering of the four roots.
  std::array<int, 4> group{0, 1, 2, 3};
  auto find = [&](int i) {
    while (group[i] != i) i = group[i] = group[group[i]];
    return i;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(roots[i] - roots[j]) <= radius) group[find(i)] = find(j);

  const double c_norm = c.norm();
  const double rank_tol = tol.rank_threshold * c_norm;

  for (int rep = 0; rep < 4; ++rep) {
    if (find(rep) != rep) continue;
    RootCluster cl;
    Complex sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      if (find(i) == rep) {
        cl.members.push_back(i);
        sum += roots[i];
      }
    }
    cl.algebraic = static_cast<int>(cl.members.size());
    cl.center = sum / static_cast<double>(cl.algebraic);
    cl.on_axis = std::abs(cl.center.real()) <= band;
    if (cl.algebraic == 1) {
      cl.geometric = 1;
    } else {
      Eigen::Matrix4cd shifted = c.cast<Complex>();
      for (int i = 0; i < 4; ++i) shifted(i, i) -= cl.center;
      Eigen::JacobiSVD<Eigen::Matrix4cd> svd(shifted);
      int rank = 0;
      for (int i = 0; i < 4; ++i) {
        const double sv = svd.singularValues()(i);
        if (sv > rank_tol) ++rank;
        if (sv >= 0.1 * rank_tol && sv <= 10.0 * rank_tol) cl.borderline = true;
      }
      cl.geometric = std::clamp(4 - rank, 1, cl.algebraic);
    }
    spec.clusters.push_back(std::move(cl));
  }
  std::sort(spec.clusters.begin(), spec.clusters.end(),
            [](const RootCluster& x, const RootCluster& y) {
              return x.members.front() < y.members.front();
            });
  return spec;
}

StabilityVerdict classify_spectrum(const Spectrum& spec, const Tolerances& tol) {
  StabilityVerdict v;
  const double rho = spec.spectral_radius();
  const double band = tol.axis_band * (1.0 + rho);
  v.max_real_part = spec.max_real_part();
  v.diagnostics["max_real_part"] = v.max_real_part;
  v.diagnostics["spectral_radius"] = rho;
  v.diagnostics["axis_band"] = band;

  for (const auto& cl : spec.clusters)
    if (cl.on_axis && cl.borderline) v.borderline = true;

  if (v.max_real_part < -band) {
    v.cls = StabilityClass::AsymptoticallyStable;
  } else if (v.max_real_part <= band) {
    bool semisimple = true;
    for (const auto& cl : spec.clusters)
      if (cl.on_axis && cl.geometric < cl.algebraic) semisimple = false;
    v.cls = semisimple ? StabilityClass::MarginallyStable
                       : StabilityClass::NonSemisimpleAxisUnstable;
  } else {
    // Instability kind follows the dominant root: a real dominant root grows
    // monotonically (divergence), a complex one oscillates (flutter).
    bool dominant_real = false;
    for (const auto& r : spec.roots)
      if (r.real() >= v.max_real_part - band && std::abs(r.imag()) <= band)
        dominant_real = true;
    v.cls = dominant_real ? StabilityClass::DivergenceUnstable
                          : StabilityClass::FlutterUnstable;
  }
  return v;
}

std::pair<Spectrum, StabilityVerdict> analyze(const SystemMatrices& sys,
                                              const Tolerances& tol) {
  const QuarticPoly p = characteristic_poly(sys);
  const Spectrum raw = solve_quartic_closed_form(p);
  const Mat4 c = first_order_matrix(sys);
  Spectrum spec = cluster_spectrum(raw.roots, c, tol);
  StabilityVerdict v = classify_spectrum(spec, tol);
  return {std::move(spec), std::move(v)};
}

StabilityVerdict classify(const SystemMatrices& sys, const Tolerances& tol) {
  return analyze(sys, tol).second;
}

}  // namespace gyrostab
