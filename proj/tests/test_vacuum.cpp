#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gup/vacuum.hpp"

using namespace gup;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("modified massless density has the closed form 1/(16 pi^2 beta^2)") {
  QuadratureConfig cfg;

  SUBCASE("beta = 1") {
    VacuumParams vp;
    auto r = vacuum_energy_density(vp, /*modified=*/true, cfg);
    CHECK(r.converged);
    // int_0^inf p^3 (1+p^2)^-3 dp = 1/4, times 1/(4 pi^2)
    CHECK(r.value.real() == doctest::Approx(1.0 / (16.0 * kPi * kPi)).epsilon(1e-10));
  }

  SUBCASE("rho scales like beta^-2 at zero mass") {
    VacuumParams vp;
    vp.model.beta = 4.0;
    auto r = vacuum_energy_density(vp, true, cfg);
    CHECK(r.value.real() == doctest::Approx(1.0 / (16.0 * kPi * kPi * 16.0)).epsilon(1e-10));

    double reference = 0.0;
    for (double beta : {0.25, 1.0, 4.0}) {
      VacuumParams q;
      q.model.beta = beta;
      const double scaled = vacuum_energy_density(q, true, cfg).value.real() * beta * beta;
      if (reference == 0.0) reference = scaled;
      CHECK(scaled == doctest::Approx(reference).epsilon(1e-8));
    }
  }

  SUBCASE("massive value, frozen from an independent high-precision quadrature") {
    VacuumParams vp;
    vp.mass = 1.0;
    auto r = vacuum_energy_density(vp, true, cfg);
    CHECK(r.value.real() == doctest::Approx(0.0084434319701948143).epsilon(1e-9));
  }

  SUBCASE("massive value off natural units: m=0.8, beta=0.6") {
    VacuumParams vp;
    vp.mass = 0.8;
    vp.model.beta = 0.6;
    auto r = vacuum_energy_density(vp, true, cfg);
    CHECK(r.value.real() == doctest::Approx(0.020235433113354463).epsilon(1e-9));
  }
}

TEST_CASE("unmodified density requires and obeys the cutoff") {
  QuadratureConfig cfg;

  SUBCASE("missing cutoff is rejected") {
    VacuumParams vp;
    CHECK_THROWS_AS(vacuum_energy_density(vp, false, cfg), std::invalid_argument);
  }

  SUBCASE("massless density is exactly Lambda^4/(16 pi^2)") {
    for (double cut : {10.0, 100.0, 1000.0}) {
      VacuumParams vp;
      vp.cutoff = cut;
      auto r = vacuum_energy_density(vp, false, cfg);
      CHECK(r.value.real() ==
            doctest::Approx(std::pow(cut, 4) / (16.0 * kPi * kPi)).epsilon(1e-11));
    }
  }

  SUBCASE("modified stays below unmodified at equal cutoff") {
    VacuumParams vp;
    vp.cutoff = 5.0;
    auto mod = vacuum_energy_density(vp, true, cfg);
    auto unmod = vacuum_energy_density(vp, false, cfg);
    CHECK(mod.value.real() < unmod.value.real());
  }

  SUBCASE("density grows with mass under both measures") {
    for (bool modified : {true, false}) {
      double prev = -1.0;
      for (double m : {0.0, 0.5, 1.0, 2.0}) {
        VacuumParams vp;
        vp.mass = m;
        vp.cutoff = 50.0;
        const double rho = vacuum_energy_density(vp, modified, cfg).value.real();
        CHECK(rho > prev);
        prev = rho;
      }
    }
  }

  SUBCASE("modified cutoff ladder converges to the no-cutoff value") {
    VacuumParams vp;
    auto full = vacuum_energy_density(vp, true, cfg).value.real();
    double prev_gap = 1.0;
    for (double cut : {10.0, 100.0, 1000.0}) {
      VacuumParams trunc = vp;
      trunc.cutoff = cut;
      const double gap = full - vacuum_energy_density(trunc, true, cfg).value.real();
      CHECK(gap > 0.0);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    // analytic tail at Lambda = 1e3 is ~1/(8 pi^2 Lambda^2) = 1.27e-8
    CHECK(prev_gap <= 2e-8);
  }
}

TEST_CASE("divergence scan") {
  QuadratureConfig cfg;
  const std::vector<double> ladder = {10.0, 100.0, 1000.0, 10000.0};

  SUBCASE("massless growth exponent is exactly 4") {
    VacuumParams vp;
    auto scan = divergence_scan(vp, ladder, cfg);
    CHECK(scan.slope == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(scan.densities.size() == 4);
  }

  SUBCASE("massive exponent approaches 4 from below") {
    VacuumParams vp;
    vp.mass = 1.0;
    auto scan = divergence_scan(vp, ladder, cfg);
    CHECK(scan.slope > 3.99);
    CHECK(scan.slope < 4.01);
  }

  SUBCASE("preconditions") {
    VacuumParams vp;
    CHECK_THROWS_AS(divergence_scan(vp, {10.0, 20.0, 30.0}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(divergence_scan(vp, {10.0, 20.0, 40.0, 80.0}, cfg), std::invalid_argument);
    vp.mass = 10.0;
    CHECK_THROWS_AS(divergence_scan(vp, ladder, cfg), std::invalid_argument);
  }
}

TEST_CASE("parameter validation") {
  VacuumParams bad_mass;
  bad_mass.mass = -1.0;
  CHECK_THROWS_AS(bad_mass.validate(), std::invalid_argument);
  VacuumParams bad_cut;
  bad_cut.cutoff = 0.0;
  CHECK_THROWS_AS(bad_cut.validate(), std::invalid_argument);
}
