#ifndef GUP_QUADRATURE_HPP
#define GUP_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "gup/model.hpp"
#include "gup/states.hpp"

namespace gup {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
  // characteristic phase frequency of the integrand in the variable the engine
  // bisects (t for the real-line transform); initial panels are sized <~ pi/hint
  std::optional<double> oscillation_hint;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    if (max_subdivisions < 1)
      throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
  }
};

struct IntegralResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

// Soft failures (tolerance not reached) come back as converged=false carrying
// the best estimate; hard failures at module level throw this.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, IntegralResult best)
      : std::runtime_error(msg), best_(best) {}
  const IntegralResult& best_estimate() const { return best_; }

 private:
  IntegralResult best_;
};

using Integrand = std::function<Complex(double)>;

// Adaptive Gauss-Kronrod 7/15 with bisection over [a, b]. Per-panel error is
// |I15 - I7|; panels are summed in ascending-interval order so the result does
// not depend on the refinement schedule.
IntegralResult integrate_interval(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg);

// Integral of f over the whole real line through the canonical substitution
//   p = tan(t)/sqrt(beta),   dp = sec^2(t)/sqrt(beta) dt,
// which compactifies R to (-pi/2, pi/2) and turns the arctan phases of the
// eigenstate families into plane waves in t.
IntegralResult integrate_real_line(const Integrand& f, const ModelParams& params,
                                   const QuadratureConfig& cfg);

// Same transform restricted to p in [p_lo, p_hi] (compactly supported states).
IntegralResult integrate_real_line(const Integrand& f, const ModelParams& params,
                                   const QuadratureConfig& cfg, double p_lo, double p_hi);

// Integral over [0, inf) via p = scale*tan(t), t in [0, pi/2).
IntegralResult integrate_half_line(const Integrand& f, double scale,
                                   const QuadratureConfig& cfg);

// Fourier-type integral  int_R g(p) exp(i*omega*p) dp  for an envelope g with
// algebraic decay. Each half line is partitioned at the half periods of the
// plane wave, segment integrals are evaluated by the adaptive rule, and the
// alternating partial sums are extrapolated with Wynn's epsilon algorithm
// (slow 1/p-type tails converge this way where plain summation cannot).
IntegralResult integrate_fourier(const Integrand& envelope, double omega,
                                 const QuadratureConfig& cfg);

// <a|b> under the chosen measure: int conj(a)(p) b(p) w(p) dp with w = 1
// (Standard) or (1+beta p^2)^-1 (KMM). When neither caller nor config sets an
// oscillation hint, the relative phase frequency of the two states is used.
IntegralResult inner_product(const StateSpec& a, const StateSpec& b, Measure measure,
                             const ModelParams& params, const QuadratureConfig& cfg);

}  // namespace gup

#endif  // GUP_QUADRATURE_HPP
