#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mpkit/rng.hpp"
#include "mpkit/spectrum.hpp"
#include "mpkit/step_distribution.hpp"
#include "test_support.hpp"

using mpkit::ExtendedReal;
using mpkit::Spectrum;
using mpkit::StepDistribution;

TEST_CASE("spectrum construction") {
  Spectrum s({1.0, 3.0, 2.0});
  CHECK(s.dimension() == 3);
  CHECK(s[0] == 3.0);
  CHECK(s[2] == 1.0);
  CHECK(s.trace() == 6.0);
  CHECK_THROWS_AS(Spectrum({}), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("esd evaluation") {
  const Spectrum s({3.0, 2.0, 1.0});
  CHECK(esd_eval(s, 2.0) == doctest::Approx(2.0 / 3.0));
  CHECK(esd_eval(s, 3.0) == 1.0);
  CHECK(esd_eval(s, 0.5) == 0.0);
  CHECK(esd_eval(Spectrum({1.0, 1.0, 1.0}), 0.5) == 0.0);
  CHECK(esd_eval(Spectrum({1.0, 1.0, 1.0}), 1.0) == 1.0);

  const StepDistribution f = esd_step(Spectrum({2.0, 2.0, 1.0}));
  CHECK(f.jump_points() == std::vector<double>{1.0, 2.0});
  CHECK(f.eval(1.5) == doctest::Approx(1.0 / 3.0));
  CHECK(f.left_limit(2.0) == doctest::Approx(1.0 / 3.0));
  CHECK(f.total_mass() == 1.0);
}

TEST_CASE("gk fraction") {
  CHECK(gk_fraction(Spectrum(std::vector<double>(7, 1.0))) == 0.0);
  CHECK(gk_fraction(Spectrum({2.0, 0.0})) == 0.5);
  CHECK(gk_fraction(Spectrum({3.0, 2.0, 1.0})) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("gk and cpv are invariant under positive scaling") {
  mpkit::Xoshiro256pp gen(7101);
  for (int i = 0; i < 100; ++i) {
    const Spectrum s = test_support::random_spectrum(gen);
    const double gk = gk_fraction(s);
    const double cpv = cpv_fraction(s, 0.6);
    for (double k : {0.5, 2.0, 10.0}) {
      const Spectrum scaled = s.scaled(k);
      CHECK(gk_fraction(scaled) == gk);
      CHECK(cpv_fraction(scaled, 0.6) == cpv);
    }
  }
}

TEST_CASE("g_step: values, scaling, rejection") {
  const Spectrum s({3.0, 2.0, 1.0});
  const StepDistribution g = g_step(s);
  CHECK(g.eval(2.0) == doctest::Approx(3.0 / 6.0));
  CHECK(g.eval(0.5) == 0.0);
  CHECK(g.total_mass() == 1.0);

  CHECK(g_step(Spectrum({2.5, 2.5})).eval(2.5) == 1.0);
  CHECK(g_step(Spectrum({5.0, 0.0})).eval(0.0) == 0.0);  // zero eigenvalue carries no mass
  CHECK_THROWS_AS(g_step(Spectrum({0.0, 0.0})), std::invalid_argument);

  // G^{kM}(kx) = G^M(x)
  mpkit::Xoshiro256pp gen(7102);
  for (int i = 0; i < 50; ++i) {
    const Spectrum base = test_support::random_spectrum(gen);
    const StepDistribution gb = g_step(base);
    for (double k : {0.5, 2.0}) {
      const StepDistribution gs = g_step(base.scaled(k));
      for (double x : base.eigenvalues()) CHECK(gs.eval(k * x) == doctest::Approx(gb.eval(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("step generalized inverse") {
  const StepDistribution g = g_step(Spectrum({3.0, 2.0, 1.0}));
  CHECK(step_generalized_inverse(g, 0.5) == ExtendedReal::finite(2.0));
  CHECK(step_generalized_inverse(g, 0.0).is_neg_inf());
  CHECK(step_generalized_inverse(g, -1.0).is_neg_inf());
  CHECK(step_generalized_inverse(g, 1.0) == ExtendedReal::finite(3.0));

  const StepDistribution defective({0.0, 1.0}, {0.3, 0.6});
  CHECK(step_generalized_inverse(defective, 0.8).is_pos_inf());
  CHECK(step_generalized_inverse(defective, 0.6) == ExtendedReal::finite(1.0));
  CHECK(step_generalized_inverse(defective, 0.30001) == ExtendedReal::finite(1.0));
}

TEST_CASE("step distribution contract") {
  CHECK_THROWS_AS(StepDistribution({1.0, 0.5}, {0.2, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepDistribution({0.5, 1.0}, {0.8, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(StepDistribution({0.5}, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(StepDistribution({}, {}), std::invalid_argument);

  const StepDistribution f({0.0, 2.0}, {0.25, 1.0});
  CHECK(f.eval(-0.1) == 0.0);
  CHECK(f.eval(0.0) == 0.25);
  CHECK(f.left_limit(0.0) == 0.0);
  CHECK(f.eval(1.9999) == 0.25);
  CHECK(f.eval(2.0) == 1.0);
  CHECK(f.left_limit(5.0) == 1.0);

  const StepDistribution half = f.scaled_mass(0.5);
  CHECK(half.total_mass() == 0.5);
  CHECK(half.eval(0.0) == 0.125);
}

TEST_CASE("cpv fraction: hand-enumerated examples") {
  CHECK(cpv_fraction(Spectrum({3.0, 2.0, 1.0}), 0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(cpv_fraction(Spectrum({2.0, 2.0, 1.0, 1.0}), 0.5) == 0.0);  // tie blocks q = 1
  CHECK(cpv_fraction(Spectrum({1.0, 1.0, 1.0}), 0.9) == 0.0);
  CHECK_THROWS_AS(cpv_fraction(Spectrum({1.0}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cpv_fraction(Spectrum({1.0}), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(cpv_fraction(Spectrum({0.0}), 0.5), std::invalid_argument);
}

TEST_CASE("cpv fraction: near-ties below the relative tolerance block a cut") {
  const double bump = 1e-13;  // far below kTieTolerance * lambda_1
  CHECK(cpv_fraction(Spectrum({2.0 + bump, 2.0, 1.0, 1.0}), 0.5) == 0.0);
  // a genuine gap is not a tie: the same spectrum with a visible drop cuts at q = 1
  CHECK(cpv_fraction(Spectrum({2.0 + 1e-3, 2.0, 1.0, 1.0}), 0.5) == doctest::Approx(0.25));
  CHECK(cpv_fraction(Spectrum({3.0, 2.0 + bump, 2.0, 1.0}), 0.4) == doctest::Approx(0.25));
}

TEST_CASE("cpv fraction: never 1, monotone in t") {
  mpkit::Xoshiro256pp gen(7103);
  for (int i = 0; i < 200; ++i) {
    const Spectrum s = test_support::random_spectrum(gen);
    double prev = -1.0;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      const double v = cpv_fraction(s, t);
      CHECK(v < 1.0);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("cpv representation equality on a random corpus with ties") {
  mpkit::Xoshiro256pp gen(7104);
  for (int i = 0; i < 1000; ++i) {
    const Spectrum s = test_support::random_spectrum(gen);
    for (double t : {0.25, 0.5, 0.75}) {
      const ExtendedReal threshold = step_generalized_inverse(g_step(s), 1.0 - t);
      const double via = threshold.is_pos_inf() ? 0.0 : 1.0 - esd_eval(s, threshold.value());
      CHECK(cpv_fraction(s, t) == doctest::Approx(via).epsilon(1e-12));
    }
  }
}

TEST_CASE("mass-share inverse bound: between the smallest positive and the largest eigenvalue") {
  mpkit::Xoshiro256pp gen(7105);
  for (int i = 0; i < 300; ++i) {
    const Spectrum s = test_support::random_spectrum(gen);
    const StepDistribution g = g_step(s);
    double min_positive = s.largest();
    for (double v : s.eigenvalues())
      if (v > 0.0) min_positive = std::min(min_positive, v);
    for (int k = 1; k <= 9; ++k) {
      const ExtendedReal inv = step_generalized_inverse(g, 0.1 * k);
      REQUIRE(inv.is_finite());
      CHECK(inv.value() >= min_positive);
      CHECK(inv.value() <= s.largest());
    }
  }
}
