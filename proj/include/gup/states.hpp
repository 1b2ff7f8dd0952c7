#ifndef GUP_STATES_HPP
#define GUP_STATES_HPP

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gup/model.hpp"

namespace gup {

using Complex = std::complex<double>;

// Momentum-space states. The three xi-labelled families share the phase
// exp[-i*xi*arctan(sqrt(beta)*p)/(hbar*sqrt(beta))] and differ in their moduli:
//
//   SymEigen  ~ (1 + beta*p^2)^(-1/2)   eigenstate of the symmetrized position
//   KmmEigen  ~ 1                       eigenstate of the KMM position operator
//   MaxLoc    ~ (1 + beta*p^2)^(-1)     maximally localized at xi
//
// each normalized under its natural measure (Standard for SymEigen/MaxLoc,
// KMM-weighted for KmmEigen).
struct SymEigen {
  double xi = 0.0;
};

struct KmmEigen {
  double xi = 0.0;
};

struct MaxLoc {
  double xi = 0.0;
};

// Normalized Gaussian test state
//   (pi*sigma^2)^(-1/4) * exp[-(p-p0)^2/(2*sigma^2)] * exp[-i*p*x0/hbar].
struct Gaussian {
  double sigma = 1.0;
  double p0 = 0.0;
  double x0 = 0.0;
};

// Tabulated state on a strictly increasing p grid; evaluated by local cubic
// interpolation. Queries outside [p.front(), p.back()] are an error, never an
// extrapolation.
class GridState {
 public:
  GridState(std::vector<double> p, std::vector<Complex> amplitude);

  const std::vector<double>& grid() const { return p_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  double p_min() const { return p_.front(); }
  double p_max() const { return p_.back(); }

  Complex value(double p) const;
  // derivative of the local interpolating cubic, O(h^3) accurate
  Complex derivative(double p) const;

 private:
  std::size_t segment(double p) const;

  std::vector<double> p_;
  std::vector<Complex> amp_;
};

using StateSpec = std::variant<SymEigen, KmmEigen, MaxLoc, Gaussian, GridState>;

// Pointwise amplitude psi(p). Closed forms are exact; GridState interpolates.
Complex evaluate(const StateSpec& state, const ModelParams& params, double p);

// Analytic d(psi)/dp for closed forms; interpolant derivative for GridState.
Complex evaluate_derivative(const StateSpec& state, const ModelParams& params, double p);

// Support in p: closed forms live on all of R (nullopt), GridState on its grid.
struct Support {
  double lo;
  double hi;
};
std::optional<Support> support(const StateSpec& state);

// Characteristic frequency of the state's phase in the t = arctan(sqrt(beta)p)
// variable: xi/(hbar*sqrt(beta)) for the arctan-phase families, x0/(hbar*sqrt(beta))
// for Gaussians (the plane-wave factor near t = 0), 0 for grids.
double phase_frequency(const StateSpec& state, const ModelParams& params);

// Sampling label for the xi families; nullopt otherwise.
std::optional<double> state_xi(const StateSpec& state);

std::string state_label(const StateSpec& state);

// Convenience: samples p*Gaussian(sigma,p0,x0) on a uniform grid over
// [-half_width, half_width] and normalizes it to unit Standard norm
// (the odd test partner used by the symmetry-defect corpus).
GridState make_odd_gaussian_grid(const Gaussian& g, const ModelParams& params,
                                 double half_width, std::size_t n_points);

}  // namespace gup

#endif  // GUP_STATES_HPP
