// Test-only oracles, independent of the library code paths they check.
#pragma once

#include "gyrostab/models.hpp"
#include "gyrostab/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace oracles {

using gyrostab::Complex;
using gyrostab::QuarticPoly;

// Direct term-by-term evaluation of the damped-rotor quartic coefficients
//   l^4 + (d1+d2) l^3 + (d1 d2 + k1 + k2 + 2w^2) l^2
//       + (k1 d2 + d1 k2 + 4 w nu - (d1+d2) w^2) l + (w^2-k1)(w^2-k2) + nu^2.
struct QuarticCoeffs {
  double c3, c2, c1, c0;
};

inline QuarticCoeffs shieh_masur_direct(const gyrostab::ShiehMasurParams& p) {
  const double w2 = p.omega * p.omega;
  QuarticCoeffs c;
  c.c3 = p.delta1 + p.delta2;
  c.c2 = p.delta1 * p.delta2 + p.k1 + p.k2 + 2.0 * w2;
  c.c1 = p.k1 * p.delta2 + p.delta1 * p.k2 + 4.0 * p.omega * p.nu -
         (p.delta1 + p.delta2) * w2;
  c.c0 = (w2 - p.k1) * (w2 - p.k2) + p.nu * p.nu;
  return c;
}

// Natural magnitude of each coefficient as a sum of absolute terms; used to
// turn "relative" tolerances into honest scales near cancellation.
inline QuarticCoeffs shieh_masur_term_scale(const gyrostab::ShiehMasurParams& p) {
  const double w2 = p.omega * p.omega;
  QuarticCoeffs c;
  c.c3 = std::abs(p.delta1) + std::abs(p.delta2);
  c.c2 = std::abs(p.delta1 * p.delta2) + std::abs(p.k1) + std::abs(p.k2) + 2.0 * w2;
  c.c1 = std::abs(p.k1 * p.delta2) + std::abs(p.delta1 * p.k2) +
         std::abs(4.0 * p.omega * p.nu) + std::abs((p.delta1 + p.delta2) * w2);
  c.c0 = std::abs((w2 - p.k1) * (w2 - p.k2)) + p.nu * p.nu;
  return c;
}

// Roots of a biquadratic l^4 + c2 l^2 + c0 via the quadratic formula on
// mu = l^2. Assumes real negative or real positive mu (real-coefficient
// quadratic with nonnegative discriminant).
inline std::array<Complex, 4> biquadratic_by_formula(double c2, double c0) {
  const double disc = c2 * c2 - 4.0 * c0;
  const Complex sq = std::sqrt(Complex(disc, 0.0));
  const Complex mu1 = (-c2 + sq) / 2.0;
  const Complex mu2 = (-c2 - sq) / 2.0;
  const Complex r1 = std::sqrt(mu1);
  const Complex r2 = std::sqrt(mu2);
  return {r1, -r1, r2, -r2};
}

// Optimal-matching (min over permutations of the max pairwise distance)
// between two root multisets.
inline double root_set_distance(std::array<Complex, 4> a, const std::array<Complex, 4>& b) {
  std::array<int, 4> idx{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  std::sort(idx.begin(), idx.end());
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[idx[i]] - b[i]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

// Residual scale from the solver contract: max(1, max|ci|) * max(1, |r|)^4.
inline double residual_scale(const QuarticPoly& p, Complex r) {
  const double m = std::max(1.0, std::abs(r));
  return p.coeff_scale() * m * m * m * m;
}

// Largest conjugate-pairing defect of a root multiset: greedily pairs every
// root with the nearest conjugate and reports the worst gap.
inline double conjugate_pairing_defect(const std::array<Complex, 4>& roots) {
  std::array<bool, 4> used{};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex want = std::conj(roots[i]);
    int best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4; ++j) {
      if (j == i && roots[i].imag() != 0.0) continue;
      if (used[j] && j != i) continue;
      const double d = std::abs(roots[j] - want);
      if (d < dist) {
        dist = d;
        best = j;
      }
    }
    if (best != i) used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline QuarticPoly random_quartic(std::mt19937_64& gen, double bound = 10.0) {
  std::uniform_real_distribution<double> u(-bound, bound);
  return {u(gen), u(gen), u(gen), u(gen)};
}

inline gyrostab::ShiehMasurParams random_shieh_masur(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> k(-2.0, 2.0);
  std::uniform_real_distribution<double> w(0.0, 1.5);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  gyrostab::ShiehMasurParams p;
  p.k1 = k(gen);
  p.k2 = k(gen);
  p.omega = w(gen);
  p.delta1 = d(gen);
  p.delta2 = d(gen);
  p.nu = d(gen);
  return p;
}

}  // namespace oracles
