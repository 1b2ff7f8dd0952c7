#ifndef GUP_FOURIER_HPP
#define GUP_FOURIER_HPP

#include "gup/model.hpp"
#include "gup/quadrature.hpp"
#include "gup/states.hpp"

namespace gup {

// Phase handling for the xi-labelled families inside the Fourier transform:
// Exact keeps exp[-i xi arctan(sqrt(beta) p)/(hbar sqrt(beta))], Linearized
// replaces arctan(sqrt(beta) p) by sqrt(beta) p, the approximation under which
// the closed-form K0/exponential profiles hold. The two coincide at xi = 0.
enum class PhaseMode { Exact, Linearized };

const char* phase_mode_name(PhaseMode mode);

// Position amplitude Psi(x) = (2 pi hbar)^(-1/2) int exp(i p x/hbar) psi(p) dp.
// SymEigen profiles are rejected for |x - xi| < 0.05 hbar sqrt(beta): the
// profile diverges logarithmically at coincidence, so callers must keep a
// minimum offset from xi.
IntegralResult position_amplitude(const StateSpec& state, PhaseMode mode,
                                  const ModelParams& params, double x,
                                  const QuadratureConfig& cfg);

// Closed-form eigenstate profile sqrt(2)/(beta^(1/4) pi sqrt(hbar)) *
// K0(|x-xi|/(hbar sqrt(beta))); exact for xi = 0, linearized-phase otherwise.
// Throws std::domain_error at x = xi.
double eigen_position_closed_form(double xi, double x, const ModelParams& params);

// Closed-form ML profile beta^(-1/4) hbar^(-1/2) exp(-|x-xi|/(hbar sqrt(beta))).
double ml_position_closed_form(double xi, double x, const ModelParams& params);

}  // namespace gup

#endif  // GUP_FOURIER_HPP
