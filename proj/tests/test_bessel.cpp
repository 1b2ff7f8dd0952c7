#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gup/bessel.hpp"
#include "gup/quadrature.hpp"

using namespace gup;

namespace {

// Independent oracle: K0(x) = int_0^inf exp(-x cosh t) dt, integrated by the
// generic adaptive rule on [0, T] with T chosen so the discarded tail is below
// underflow. This path never touches the series/continued-fraction code.
double k0_integral_oracle(double x) {
  const double target = 745.0;  // exp(-745) is the smallest normal magnitude we need
  const double ratio = target / x;
  const double t_max = (ratio > 1.0) ? std::acosh(ratio) : 1.0;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-300;
  cfg.max_subdivisions = 20000;
  auto r = integrate_interval(
      [x](double t) { return Complex{std::exp(-x * std::cosh(t)), 0.0}; }, 0.0, t_max, cfg);
  REQUIRE(r.converged);
  return r.value.real();
}

}  // namespace

TEST_CASE("pinned values") {
  CHECK(bessel_k0(1.0) == doctest::Approx(0.42102443824070833).epsilon(1e-12));
  CHECK(bessel_k0(0.1) == doctest::Approx(2.4270690247020166).epsilon(1e-12));
  CHECK(bessel_k0(2.0) == doctest::Approx(0.11389387274953344).epsilon(1e-12));
  CHECK(bessel_k0(5.0) == doctest::Approx(0.0036910983340425943).epsilon(1e-12));
  CHECK(bessel_k0(10.0) == doctest::Approx(1.7780062316167652e-05).epsilon(1e-12));
  CHECK(bessel_k0(50.0) == doctest::Approx(3.4101677497894955e-23).epsilon(1e-12));
}

TEST_CASE("cross-validation against the integral representation") {
  // includes both sides of the series/continued-fraction switch at x = 2
  for (double x : {0.05, 0.1, 0.5, 1.0, 1.999, 2.0, 2.001, 3.0, 5.0, 10.0, 20.0, 50.0, 100.0,
                   200.0, 500.0}) {
    const double oracle = k0_integral_oracle(x);
    CHECK(std::abs(bessel_k0(x) - oracle) <= 1e-10 * oracle);
  }
}

TEST_CASE("leading asymptotic law") {
  // K0(x) e^x sqrt(x) -> sqrt(pi/2); the deviation is the 1/(8x) correction,
  // -2.4724e-3 at x = 50 (so the limit is approached like 1/x, and a blanket
  // 1e-3 agreement at x = 50 is not attainable)
  const double sqrt_pi_half = 1.2533141373155003;
  const double dev50 = bessel_k0(50.0) * std::exp(50.0) * std::sqrt(50.0) / sqrt_pi_half - 1.0;
  CHECK(dev50 == doctest::Approx(-2.4724436853370308e-3).epsilon(1e-6));

  const double dev500 = bessel_k0(500.0) * std::exp(500.0) * std::sqrt(500.0) / sqrt_pi_half - 1.0;
  CHECK(dev500 == doctest::Approx(-2.4971933415029744e-4).epsilon(1e-6));
  // 1/x convergence: ten times farther out, ten times closer in
  CHECK(std::abs(dev500) < 0.12 * std::abs(dev50));
}

TEST_CASE("small-x logarithmic form") {
  // K0(x) + ln(x/2) + gamma = (x^2/4)(1 - gamma - ln(x/2)) + O(x^4 log x);
  // the residual at x = 0.1 is 8.5524e-3 (the x^2 coefficient carries the log)
  const double gamma = 0.57721566490153286;
  const double r1 = bessel_k0(0.1) + std::log(0.1 / 2.0) + gamma;
  CHECK(r1 == doctest::Approx(8.5524160495584797e-3).epsilon(1e-6));
  const double r2 = bessel_k0(0.05) + std::log(0.05 / 2.0) + gamma;
  CHECK(r2 == doctest::Approx(2.5702402595864517e-3).epsilon(1e-6));
  // shrinks roughly like x^2 (modulo the slowly growing log factor)
  CHECK(r2 < 0.4 * r1);
}

TEST_CASE("domain errors at and below zero") {
  CHECK_THROWS_AS(bessel_k0(0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_k0(-1.0), std::domain_error);
}

TEST_CASE("monotone decay") {
  double prev = bessel_k0(0.01);
  for (double x = 0.05; x < 30.0; x += 0.37) {
    const double cur = bessel_k0(x);
    CHECK(cur < prev);
    CHECK(cur > 0.0);
    prev = cur;
  }
}
