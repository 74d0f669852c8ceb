#include "gyrostab/criteria.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gyrostab {

double CriterionReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [name, value] : margins) m = std::min(m, value);
  return m;
}

CriterionReport make_report(std::string name,
                            std::vector<std::pair<std::string, double>> margins,
                            std::vector<std::pair<std::string, double>> extras) {
  CriterionReport r;
  r.name = std::move(name);
  r.margins = std::move(margins);
  r.extras = std::move(extras);
  r.satisfied = r.min_margin() > 0.0;
  return r;
}

CriterionReport brouwer_marginal(const BrouwerParams& p) {
  const double w2 = p.omega * p.omega;
  const double m1 = (p.k1 - w2) * (p.k2 - w2);
  const double m2 = p.k1 + p.k2 + 2.0 * w2;
  const double m3 = (p.k1 - p.k2) * (p.k1 - p.k2) + 8.0 * w2 * (p.k1 + p.k2);
  return make_report("brouwer_marginal", {{"m1", m1}, {"m2", m2}, {"m3", m3}});
}

CriterionReport lienard_chipart(const ShiehMasurParams& p) {
  const double w2 = p.omega * p.omega;
  const double p1 = p.delta1 + p.delta2;
  const double p2 = p.delta1 * p.delta2 + p.k1 + p.k2 + 2.0 * w2;
  const double p3 =
      p.k1 * p.delta2 + p.delta1 * p.k2 + 4.0 * p.omega * p.nu - (p.delta1 + p.delta2) * w2;
  const double p4 = (w2 - p.k1) * (w2 - p.k2) + p.nu * p.nu;
  const double h3 = p1 * p2 * p3 - p1 * p1 * p4 - p3 * p3;
  return make_report("lienard_chipart",
                     {{"p1", p1}, {"p2", p2}, {"p4", p4}, {"H3", h3}},
                     {{"p3", p3}});
}

CriterionReport biquadratic_conditions(const SystemMatrices& sys) {
  const double tr_b = sys.b.trace();
  const double tr_ab = (sys.a * sys.b).trace();
  const double tol_b = 1e-12 * (1.0 + sys.b.norm());
  const double tol_ab = 1e-12 * (1.0 + sys.a.norm() * sys.b.norm());

  const Mat2 as = sys.a_symmetric(), aa = sys.a_skew();
  const Mat2 bs = sys.b_symmetric(), ba = sys.b_skew();
  const double split = (as * bs).trace() + (aa * ba).trace();

  return make_report("biquadratic_conditions",
                     {{"tr_b", tol_b - std::abs(tr_b)},
                      {"tr_ab", tol_ab - std::abs(tr_ab)}},
                     {{"tr_b_raw", tr_b},
                      {"tr_ab_raw", tr_ab},
                      {"tr_bs", bs.trace()},
                      {"tr_split_sum", split}});
}

namespace {

void require_window_preconditions(double k1, double omega, double nu) {
  if (!(k1 > omega * omega)) {
    std::ostringstream msg;
    msg << "requires k1 > omega^2 (k1=" << k1 << ", omega^2=" << omega * omega << ")";
    throw std::domain_error(msg.str());
  }
  if (!(nu > 0.0)) {
    std::ostringstream msg;
    msg << "requires nu > 0 (nu=" << nu << ")";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

PureImaginaryWindow pure_imaginary_window(double k1, double omega, double nu) {
  require_window_preconditions(k1, omega, nu);
  const double gap = k1 - omega * omega;
  PureImaginaryWindow w;
  w.delta_d = 4.0 * omega * nu * gap / (nu * nu + gap * gap);
  w.kappa_d = -k1 + omega * omega - nu * nu / gap;
  w.negative_branch = {-2.0 * omega, 0.0};
  w.positive_branch = {w.delta_d, 2.0 * omega};
  return w;
}

std::vector<ExceptionalPoint> exceptional_points(double k1, double omega, double nu) {
  require_window_preconditions(k1, omega, nu);
  const double gap = k1 - omega * omega;

  std::vector<ExceptionalPoint> pts;
  {
    ExceptionalPoint ep;
    ep.delta1 = -2.0 * omega;
    ep.delta2 = 2.0 * omega;
    ep.kappa = 2.0 * nu;
    ep.eigenvalue = Complex(0.0, 1.0) * std::sqrt(Complex(gap + nu, 0.0));
    ep.kind = DegeneracyKind::EpImaginaryPair;
    ep.pure_imaginary = gap + nu >= 0.0;
    pts.push_back(ep);
  }
  {
    ExceptionalPoint ep;
    ep.delta1 = 2.0 * omega;
    ep.delta2 = -2.0 * omega;
    ep.kappa = -2.0 * nu;
    ep.eigenvalue = Complex(0.0, 1.0) * std::sqrt(Complex(gap - nu, 0.0));
    ep.kind = DegeneracyKind::EpImaginaryPair;
    ep.pure_imaginary = gap - nu >= 0.0;
    pts.push_back(ep);
  }
  {
    const PureImaginaryWindow w = pure_imaginary_window(k1, omega, nu);
    ExceptionalPoint dz;
    dz.delta1 = w.delta_d;
    dz.delta2 = -w.delta_d;
    dz.kappa = w.kappa_d;
    dz.eigenvalue = Complex(0.0, 0.0);
    dz.kind = DegeneracyKind::DoubleZero;
    dz.pure_imaginary = true;
    pts.push_back(dz);
  }
  return pts;
}

CriterionReport rankine_threshold(double k1, double omega) {
  const double margin = k1 - omega * omega;
  std::vector<std::pair<std::string, double>> extras;
  if (margin < 0.0) extras.emplace_back("growth_rate", std::sqrt(-margin));
  return make_report("rankine_threshold", {{"stability_margin", margin}},
                     std::move(extras));
}

std::pair<double, double> bubble_interval(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    std::ostringstream msg;
    msg << "requires 0 <= eps < 1 (eps=" << epsilon << ")";
    throw std::domain_error(msg.str());
  }
  return {std::sqrt(1.0 - epsilon), std::sqrt(1.0 + epsilon)};
}

}  // namespace gyrostab
