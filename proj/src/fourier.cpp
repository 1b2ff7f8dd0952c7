#include "gup/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "gup/bessel.hpp"

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;

// amplitude with the arctan phase stripped or linearized, so the caller can
// factor the full integrand as envelope(p) * exp(i kappa p)
Complex envelope_amplitude(const StateSpec& state, PhaseMode mode, const ModelParams& params,
                           double p) {
  const auto xi = state_xi(state);
  if (!xi || mode == PhaseMode::Exact) return evaluate(state, params, p);
  // linearized: drop the exact phase, the plane-wave factor moves into kappa
  const double sb = std::sqrt(params.beta);
  const double theta = *xi * std::atan(sb * p) / (params.hbar * sb);
  return evaluate(state, params, p) * Complex{std::cos(theta), std::sin(theta)};
}

}  // namespace

const char* phase_mode_name(PhaseMode mode) {
  return mode == PhaseMode::Exact ? "exact" : "linearized";
}

IntegralResult position_amplitude(const StateSpec& state, PhaseMode mode,
                                  const ModelParams& params, double x,
                                  const QuadratureConfig& cfg) {
  params.validate();
  const auto xi = state_xi(state);

  if (std::holds_alternative<KmmEigen>(state))
    throw std::domain_error(
        "position_amplitude: constant-modulus states have no L2 position profile");
  if (std::holds_alternative<SymEigen>(state)) {
    const double offset = std::abs(x - *xi);
    if (offset < 0.05 * params.length_scale())
      throw std::domain_error(
          "position_amplitude: eigenstate profile diverges logarithmically at x = xi; "
          "keep |x - xi| >= 0.05*hbar*sqrt(beta)");
  }

  const double prefactor = 1.0 / std::sqrt(2.0 * kPi * params.hbar);
  // Linearized phase exp(-i xi p/hbar) shifts the plane wave: kappa = (x-xi)/hbar
  const double kappa =
      (mode == PhaseMode::Linearized && xi) ? (x - *xi) / params.hbar : x / params.hbar;

  if (auto s = support(state)) {
    // compactly supported grid: single finite-interval quadrature
    Integrand f = [&](double p) {
      const double th = kappa * p;
      return prefactor * envelope_amplitude(state, mode, params, p) *
             Complex{std::cos(th), std::sin(th)};
    };
    QuadratureConfig local = cfg;
    if (!local.oscillation_hint && std::abs(kappa) > 1.0) local.oscillation_hint = std::abs(kappa);
    return integrate_interval(f, s->lo, s->hi, local);
  }

  Integrand envelope = [&](double p) {
    return prefactor * envelope_amplitude(state, mode, params, p);
  };
  return integrate_fourier(envelope, kappa, cfg);
}

double eigen_position_closed_form(double xi, double x, const ModelParams& params) {
  params.validate();
  const double scale = params.length_scale();
  if (x == xi)
    throw std::domain_error("eigen_position_closed_form: diverges at x = xi");
  return std::sqrt(2.0) / (std::pow(params.beta, 0.25) * kPi * std::sqrt(params.hbar)) *
         bessel_k0(std::abs(x - xi) / scale);
}

double ml_position_closed_form(double xi, double x, const ModelParams& params) {
  params.validate();
  const double scale = params.length_scale();
  return std::pow(params.beta, -0.25) / std::sqrt(params.hbar) *
         std::exp(-std::abs(x - xi) / scale);
}

}  // namespace gup
