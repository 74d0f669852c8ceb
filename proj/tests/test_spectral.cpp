#include "gyrostab/spectral.hpp"

#include "gyrostab/models.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace gyrostab;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("characteristic poly of decoupled unit oscillators") {
  const SystemMatrices sys = build_brouwer({1.0, 1.0, 0.0});
  const QuarticPoly p = characteristic_poly(sys);
  CHECK(p.c3 == 0.0);
  CHECK(p.c2 == 2.0);
  CHECK(p.c1 == 0.0);
  CHECK(p.c0 == 1.0);
}

TEST_CASE("characteristic poly of the rotating saddle k1=1, k2=-1, omega=1") {
  const SystemMatrices sys = build_brouwer({1.0, -1.0, 1.0});
  const QuarticPoly p = characteristic_poly(sys);
  CHECK(p.c3 == 0.0);
  CHECK(p.c2 == doctest::Approx(2.0).epsilon(1e-15));  // k1+k2+2w^2
  CHECK(p.c1 == 0.0);
  CHECK(p.c0 == 0.0);  // (k1-w^2)(k2-w^2)
}

TEST_CASE("coefficient identities c3 = tr B, c0 = det A on random systems") {
  auto gen = oracles::rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto sp = oracles::random_shieh_masur(gen);
    const SystemMatrices sys = build_shieh_masur(sp);
    const QuarticPoly p = characteristic_poly(sys);
    CHECK(p.c3 == sys.b.trace());
    CHECK(p.c0 == sys.a.determinant());
  }
}

TEST_CASE("damped-rotor coefficients match the direct expansion") {
  auto gen = oracles::rng(22);
  for (int i = 0; i < 5000; ++i) {
    const auto sp = oracles::random_shieh_masur(gen);
    const QuarticPoly p = characteristic_poly(build_shieh_masur(sp));
    const auto direct = oracles::shieh_masur_direct(sp);
    const auto scale = oracles::shieh_masur_term_scale(sp);
    CHECK(std::abs(p.c3 - direct.c3) <= 1e-12 * std::max(1.0, scale.c3));
    CHECK(std::abs(p.c2 - direct.c2) <= 1e-12 * std::max(1.0, scale.c2));
    CHECK(std::abs(p.c1 - direct.c1) <= 1e-12 * std::max(1.0, scale.c1));
    CHECK(std::abs(p.c0 - direct.c0) <= 1e-12 * std::max(1.0, scale.c0));
  }
}

TEST_CASE("perfect square quartic gives double +-i") {
  const auto spec = solve_quartic_closed_form({0.0, 2.0, 0.0, 1.0});
  int plus = 0, minus = 0;
  for (const auto& r : spec.roots) {
    CHECK(std::abs(r - Complex(0.0, 1.0)) < 1e-8 ? true : std::abs(r - Complex(0.0, -1.0)) < 1e-8);
    if (r.imag() > 0) ++plus;
    else ++minus;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
}

TEST_CASE("saddle biquadratic roots match the quadratic-formula oracle") {
  // k1=-0.1, k2=0.2, omega=0.5 -> l^4 + 0.6 l^2 + 0.0175
  const auto expected = oracles::biquadratic_by_formula(0.6, 0.0175);
  // Frozen from the oracle: mu = (-0.6 +- sqrt(0.29)) / 2.
  CHECK(expected[0].imag() == doctest::Approx(0.1753332816189636).epsilon(1e-12));
  CHECK(expected[2].imag() == doctest::Approx(0.7544920412812353).epsilon(1e-12));
  const auto spec = solve_quartic_closed_form({0.0, 0.6, 0.0, 0.0175});
  CHECK(oracles::root_set_distance(spec.roots, expected) < 1e-12);
  for (const auto& r : spec.roots) CHECK(r.real() == 0.0);
}

TEST_CASE("detuned-rotor point k1=1.2, k2=0.8, omega=1 splits real/imaginary") {
  // l^4 + 4 l^2 - 0.04; oracle: one pair +-sqrt(mu+), one pair +-i sqrt(-mu-).
  const auto expected = oracles::biquadratic_by_formula(4.0, -0.04);
  CHECK(std::abs(expected[0].real()) == doctest::Approx(0.0998755436740041).epsilon(1e-12));
  CHECK(std::abs(expected[2].imag()) == doctest::Approx(2.0024922282556252).epsilon(1e-12));
  const auto spec = solve_quartic_closed_form({0.0, 4.0, 0.0, -0.04});
  CHECK(oracles::root_set_distance(spec.roots, expected) < 1e-12);
}

TEST_CASE("closed form and companion agree on the worked examples") {
  const QuarticPoly polys[] = {
      {0.0, 2.0, 0.0, 1.0}, {0.0, 0.6, 0.0, 0.0175}, {0.0, 4.0, 0.0, -0.04}};
  for (const auto& p : polys) {
    const auto a = solve_quartic_closed_form(p);
    const auto b = solve_quartic_companion(p);
    double scale = 0.0;
    for (const auto& r : a.roots) scale = std::max(scale, oracles::residual_scale(p, r));
    CHECK(oracles::root_set_distance(a.roots, b.roots) <= 1e-10 * scale);
  }
}

TEST_CASE("solver equivalence and residual bound on random quartics") {
  auto gen = oracles::rng(33);
  for (int i = 0; i < 20000; ++i) {
    const QuarticPoly p = oracles::random_quartic(gen);
    const auto a = solve_quartic_closed_form(p);
    const auto b = solve_quartic_companion(p);
    double scale = 1.0;
    for (const auto& r : a.roots) scale = std::max(scale, oracles::residual_scale(p, r));
    CHECK(oracles::root_set_distance(a.roots, b.roots) <= 1e-10 * scale);
    for (const auto& r : a.roots) {
      CHECK(std::abs(p.eval(r)) <= 1e-9 * oracles::residual_scale(p, r));
    }
  }
}

TEST_CASE("conjugate symmetry of produced spectra") {
  auto gen = oracles::rng(44);
  for (int i = 0; i < 20000; ++i) {
    const QuarticPoly p = oracles::random_quartic(gen);
    const auto spec = solve_quartic_closed_form(p);
    const double scale = std::max(1.0, spec.spectral_radius());
    CHECK(oracles::conjugate_pairing_defect(spec.roots) <= 1e-12 * scale);
  }
}

TEST_CASE("trace conditions force spectra symmetric under real-part flip") {
  auto gen = oracles::rng(55);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 5000; ++i) {
    SystemMatrices sys;
    sys.a << u(gen), u(gen), u(gen), u(gen);
    // Traceless B with tr(AB) = 0: solve for b11 given b12, b21.
    const double b12 = u(gen), b21 = u(gen);
    const double denom = sys.a(0, 0) - sys.a(1, 1);
    if (std::abs(denom) < 1e-3) continue;
    const double b11 = -(sys.a(0, 1) * b21 + sys.a(1, 0) * b12) / denom;
    sys.b << b11, b12, b21, -b11;

    const QuarticPoly p = characteristic_poly(sys);
    REQUIRE(p.c3 == 0.0);
    const auto spec = solve_quartic_closed_form(p);
    std::array<Complex, 4> flipped;
    for (int j = 0; j < 4; ++j)
      flipped[j] = Complex(-spec.roots[j].real(), spec.roots[j].imag());
    const double scale = std::max(1.0, spec.spectral_radius());
    CHECK(oracles::root_set_distance(spec.roots, flipped) <= 1e-9 * scale);
  }
}

TEST_CASE("quadruple zero at the origin is a Jordan block of geometric mult 2") {
  const auto [spec, verdict] = analyze(build_brouwer({0.0, 0.0, 0.0}));
  REQUIRE(spec.clusters.size() == 1);
  CHECK(spec.clusters[0].algebraic == 4);
  CHECK(spec.clusters[0].geometric == 2);
  CHECK(spec.clusters[0].on_axis);
  CHECK(verdict.cls == StabilityClass::NonSemisimpleAxisUnstable);
}

TEST_CASE("identical decoupled oscillators are semisimple double +-i") {
  const auto [spec, verdict] = analyze(build_brouwer({1.0, 1.0, 0.0}));
  REQUIRE(spec.clusters.size() == 2);
  for (const auto& cl : spec.clusters) {
    CHECK(cl.algebraic == 2);
    CHECK(cl.geometric == 2);
    CHECK(cl.on_axis);
  }
  CHECK(verdict.cls == StabilityClass::MarginallyStable);
}

TEST_CASE("gyroscopically stabilized saddle classifies marginal") {
  const auto verdict = classify(build_brouwer({-0.1, 0.2, 0.5}));
  CHECK(verdict.cls == StabilityClass::MarginallyStable);
  CHECK(std::abs(verdict.max_real_part) <= 1e-10);
}

TEST_CASE("verdict kinds for plain unstable systems") {
  // Saddle without rotation: positive real eigenvalue.
  CHECK(classify(build_brouwer({1.0, -1.0, 0.0})).cls == StabilityClass::DivergenceUnstable);
  // Krein-collision region of the rotating saddle: complex quartet.
  CHECK(classify(build_brouwer({-1.0, -0.9, 1.2})).cls == StabilityClass::FlutterUnstable);
  // Damped rotor far inside the asymptotic domain.
  CHECK(classify(build_shieh_masur({1.0, 1.0, 0.03, 0.3, 0.3, 0.0})).cls ==
        StabilityClass::AsymptoticallyStable);
}

TEST_CASE("quartic discriminant vanishes exactly on a squared quadratic") {
  CHECK(quartic_discriminant({0.0, 2.0, 0.0, 1.0}) == 0.0);
  CHECK(quartic_discriminant({0.0, 0.6, 0.0, 0.0175}) > 0.0);
}

TEST_SUITE_END();
