#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gup/quadrature.hpp"

using namespace gup;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

}  // namespace

TEST_CASE("real-line integrals with known antiderivatives") {
  ModelParams params;
  QuadratureConfig cfg;

  SUBCASE("lorentzian integrates to pi") {
    auto r = integrate_real_line([](double p) { return Complex{1.0 / (1.0 + p * p), 0.0}; },
                                 params, cfg);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(std::abs(r.value.imag()) < 1e-14);
    CHECK(r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * kPi));
  }

  SUBCASE("squared lorentzian: reduction formula gives pi/2") {
    auto r = integrate_real_line(
        [](double p) {
          const double w = 1.0 + p * p;
          return Complex{1.0 / (w * w), 0.0};
        },
        params, cfg);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  }

  SUBCASE("p^2/(1+p^2)^2: partial fractions give pi/2") {
    auto r = integrate_real_line(
        [](double p) {
          const double w = 1.0 + p * p;
          return Complex{p * p / (w * w), 0.0};
        },
        params, cfg);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  }

  SUBCASE("beta rescales the transform, not the answer") {
    ModelParams scaled{0.25, 2.0};
    auto r = integrate_real_line([](double p) { return Complex{1.0 / (1.0 + p * p), 0.0}; },
                                 scaled, cfg);
    CHECK(r.value.real() == doctest::Approx(kPi).epsilon(1e-12));
  }
}

TEST_CASE("linearity on random integrand pairs") {
  ModelParams params;
  QuadratureConfig cfg;
  std::mt19937 rng(20240811u);
  std::uniform_real_distribution<double> amp(0.2, 2.0);
  std::uniform_real_distribution<double> center(-2.0, 2.0);

  for (int trial = 0; trial < 10; ++trial) {
    const double a1 = amp(rng), c1 = center(rng);
    const double a2 = amp(rng), c2 = center(rng);
    Integrand f = [a1, c1](double p) {
      return Complex{a1 * std::exp(-(p - c1) * (p - c1)), 0.0};
    };
    Integrand g = [a2, c2](double p) {
      const double w = 1.0 + (p - c2) * (p - c2);
      return Complex{a2 / (w * w), 0.0};
    };
    Integrand sum = [&f, &g](double p) { return f(p) + g(p); };

    auto rf = integrate_real_line(f, params, cfg);
    auto rg = integrate_real_line(g, params, cfg);
    auto rs = integrate_real_line(sum, params, cfg);
    CHECK(std::abs(rs.value - rf.value - rg.value) <=
          rs.error_estimate + rf.error_estimate + rg.error_estimate + 1e-13);
  }
}

TEST_CASE("substitution consistency against a generic finite-interval rule") {
  ModelParams params{2.0, 1.0};
  QuadratureConfig cfg;
  const double sb = std::sqrt(params.beta);

  Integrand f = [](double p) {
    return Complex{std::exp(-0.5 * p * p), 0.0};
  };
  Integrand substituted = [&f, sb](double t) {
    const double c = std::cos(t);
    return f(std::tan(t) / sb) / (c * c * sb);
  };

  auto direct = integrate_real_line(f, params, cfg);
  auto generic = integrate_interval(substituted, -kHalfPi, kHalfPi, cfg);
  CHECK(std::abs(direct.value - generic.value) <=
        direct.error_estimate + generic.error_estimate + 1e-13);
  CHECK(direct.value.real() == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-11));
}

TEST_CASE("inner products under both measures") {
  ModelParams params;
  QuadratureConfig cfg;

  SUBCASE("eigenstate normalization under its natural measure") {
    auto sym = inner_product(SymEigen{0.0}, SymEigen{0.0}, Measure::Standard, params, cfg);
    CHECK(sym.converged);
    CHECK(sym.value.real() == doctest::Approx(1.0).epsilon(1e-11));

    auto kmm = inner_product(KmmEigen{0.0}, KmmEigen{0.0}, Measure::KMM, params, cfg);
    CHECK(kmm.converged);
    CHECK(kmm.value.real() == doctest::Approx(1.0).epsilon(1e-11));
  }

  SUBCASE("half-lattice separation overlap is 2/pi") {
    auto r = inner_product(SymEigen{0.0}, SymEigen{1.0}, Measure::Standard, params, cfg);
    CHECK(r.value.real() == doctest::Approx(0.63661977236758134).epsilon(1e-11));
    CHECK(std::abs(r.value.imag()) < 1e-11);
  }

  SUBCASE("conjugate symmetry") {
    StateSpec a = MaxLoc{1.0};
    StateSpec b = Gaussian{0.8, 0.3, 1.2};
    auto ab = inner_product(a, b, Measure::Standard, params, cfg);
    auto ba = inner_product(b, a, Measure::Standard, params, cfg);
    CHECK(std::abs(ab.value - std::conj(ba.value)) <=
          ab.error_estimate + ba.error_estimate + 1e-13);
  }

  SUBCASE("norms are real, positive, and KMM-weighted norms are smaller") {
    std::vector<StateSpec> states = {SymEigen{2.0}, MaxLoc{-1.0}, Gaussian{1.3, -0.4, 0.7}};
    for (const auto& s : states) {
      auto std_norm = inner_product(s, s, Measure::Standard, params, cfg);
      auto kmm_norm = inner_product(s, s, Measure::KMM, params, cfg);
      CHECK(std::abs(std_norm.value.imag()) < cfg.abs_tol + 1e-13);
      CHECK(std_norm.value.real() > 0.0);
      CHECK(kmm_norm.value.real() <= std_norm.value.real() + 1e-12);
    }
  }

  SUBCASE("gaussian pair has the closed-form overlap sqrt(2 s1 s2/(s1^2+s2^2))") {
    auto r = inner_product(Gaussian{1.0, 0.0, 0.0}, Gaussian{2.0, 0.0, 0.0}, Measure::Standard,
                           params, cfg);
    CHECK(r.value.real() == doctest::Approx(0.89442719099991588).epsilon(1e-11));
  }

  SUBCASE("constant-modulus state is not normalizable under Standard") {
    auto r = inner_product(KmmEigen{0.0}, KmmEigen{0.0}, Measure::Standard, params, cfg);
    CHECK_FALSE(r.converged);
  }
}

TEST_CASE("oscillatory overlaps stay accurate at large separation") {
  ModelParams params;
  QuadratureConfig cfg;
  // exact overlap is sin(y)/y with y = separation*pi/2
  for (double xi : {7.0, 23.0, 61.0}) {
    auto r = inner_product(SymEigen{0.0}, SymEigen{xi}, Measure::Standard, params, cfg);
    const double y = xi * kPi / 2.0;
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() - std::sin(y) / y) < 1e-10);
    CHECK(std::abs(r.value.imag()) < 1e-10);
  }
}

TEST_CASE("convergence failure carries the best estimate") {
  ModelParams params;
  QuadratureConfig cfg;
  cfg.max_subdivisions = 20;
  // integrable but extremely spiky: resolving it needs far more panels
  auto r = integrate_real_line(
      [](double p) { return Complex{1e8 / (1.0 + 1e16 * p * p), 0.0}; }, params, cfg);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value.real()));
  CHECK(r.error_estimate > 0.0);
}

TEST_CASE("config validation") {
  QuadratureConfig bad;
  bad.rel_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  QuadratureConfig bad2;
  bad2.max_subdivisions = 0;
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("grid-state inner products integrate over the common support") {
  ModelParams params;
  QuadratureConfig cfg;
  Gaussian g{1.0, 0.0, 0.0};
  const std::size_t n = 4001;
  std::vector<double> p(n);
  std::vector<Complex> amp(n);
  for (std::size_t k = 0; k < n; ++k) {
    p[k] = -12.0 + 0.006 * static_cast<double>(k);
    amp[k] = evaluate(g, params, p[k]);
  }
  StateSpec grid = GridState(p, amp);
  auto r = inner_product(grid, grid, Measure::Standard, params, cfg);
  CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-8));
  auto cross = inner_product(grid, StateSpec{g}, Measure::Standard, params, cfg);
  CHECK(cross.value.real() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("fourier engine reproduces known transforms") {
  QuadratureConfig cfg;

  SUBCASE("lorentzian transform: int (1+p^2)^-1 e^{i w p} dp = pi e^{-|w|}") {
    Integrand env = [](double p) { return Complex{1.0 / (1.0 + p * p), 0.0}; };
    for (double w : {0.5, 1.0, 4.0, -2.0}) {
      auto r = integrate_fourier(env, w, cfg);
      CHECK(r.converged);
      CHECK(r.value.real() == doctest::Approx(kPi * std::exp(-std::abs(w))).epsilon(1e-9));
      CHECK(std::abs(r.value.imag()) < 1e-10);
    }
  }

  SUBCASE("gaussian transform: int e^{-p^2/2} e^{i w p} dp = sqrt(2 pi) e^{-w^2/2}") {
    Integrand env = [](double p) { return Complex{std::exp(-0.5 * p * p), 0.0}; };
    // 1e-5 exercises the direct small-frequency path, where half-period
    // segments would be ~3e5 wide and sample past the envelope
    for (double w : {0.0, 1e-5, 0.002, 1.0, 3.0}) {
      auto r = integrate_fourier(env, w, cfg);
      CHECK(r.converged);
      CHECK(r.value.real() ==
            doctest::Approx(std::sqrt(2.0 * kPi) * std::exp(-0.5 * w * w)).epsilon(1e-9));
    }
  }
}

TEST_CASE("oscillation hint seeds panels finer than the phase") {
  QuadratureConfig hinted;
  hinted.oscillation_hint = 61.0;
  Integrand f = [](double t) { return Complex{std::cos(61.0 * t), 0.0}; };
  const double exact = 2.0 * std::sin(61.0 * kHalfPi) / 61.0;

  auto with_hint = integrate_interval(f, -kHalfPi, kHalfPi, hinted);
  CHECK(with_hint.converged);
  CHECK(with_hint.value.real() == doctest::Approx(exact).epsilon(1e-10));

  QuadratureConfig plain;
  auto without = integrate_interval(f, -kHalfPi, kHalfPi, plain);
  CHECK(without.converged);
  // the unseeded run has to discover the oscillation by refinement
  CHECK(with_hint.evaluations <= without.evaluations);
}
