#ifndef GUP_VACUUM_HPP
#define GUP_VACUUM_HPP

#include <optional>
#include <vector>

#include "gup/model.hpp"
#include "gup/quadrature.hpp"

namespace gup {

struct VacuumParams {
  double mass = 0.0;  // field mass in momentum units (c = 1)
  ModelParams model;
  std::optional<double> cutoff;  // momentum cutoff; required when unmodified

  void validate() const {
    model.validate();
    if (!(mass >= 0.0)) throw std::invalid_argument("VacuumParams: mass must be >= 0");
    if (cutoff && !(*cutoff > 0.0))
      throw std::invalid_argument("VacuumParams: cutoff must be positive");
  }
};

// Vacuum energy density with the radial reduction done analytically:
//   rho = 1/(2 pi^2) * int_0^{Lambda or inf} (1/2) sqrt(p^2+m^2) p^2 w(p) dp,
// w = (1 + beta p^2)^-3 under the GUP phase-space measure (no cutoff needed),
// w = 1 otherwise (cutoff mandatory; the integral diverges like Lambda^4).
IntegralResult vacuum_energy_density(const VacuumParams& vp, bool modified,
                                     const QuadratureConfig& cfg);

struct DivergenceScan {
  std::vector<double> cutoffs;
  std::vector<IntegralResult> densities;
  double slope = 0.0;  // log-log least-squares growth exponent
};

// Unmodified density across a cutoff ladder plus the fitted growth exponent;
// requires >= 4 cutoffs spanning >= 2 decades, all well above the mass.
DivergenceScan divergence_scan(const VacuumParams& vp, const std::vector<double>& cutoffs,
                               const QuadratureConfig& cfg);

}  // namespace gup

#endif  // GUP_VACUUM_HPP
