#ifndef GUP_MAXLOC_HPP
#define GUP_MAXLOC_HPP

#include <complex>

#include "gup/model.hpp"
#include "gup/states.hpp"

namespace gup {

// Overlap of two maximally localized states,
//   <ML_xi | ML_xi'> = sin(pi x) / (pi (x - x^3)),  x = (xi' - xi)/(2 hbar sqrt(beta)).
// Removable singularities: x -> 0 gives 1, x -> +-1 gives 1/2. Note the
// adjacent-lattice-site value is 1/2, not 0: the discretized ML family is NOT
// orthogonal, and direct quadrature of the defining integral confirms 1/2.
double ml_overlap_analytic(double xi, double xi_prime, const ModelParams& params);

// Overlap of an eigenstate at xi_eigen with the ML state at xi_ml,
//   2 sqrt(2) cos(pi d/2) / (pi (1 - d^2)),  d = (xi_ml - xi_eigen)/(hbar sqrt(beta)),
// with the L'Hopital branch at |d| = 1. This is the sign convention the
// defining integral satisfies: positive at d = 0 and at every even lattice
// separation d = 2m the value is 2 sqrt(2) (-1)^(m+1) / (pi (4m^2 - 1)).
double ml_eigen_overlap_analytic(double xi_eigen, double xi_ml, const ModelParams& params);

// Truncated span sum  sum_{|m|<=N} 8 / (pi^2 (4m^2-1)^2); increases to 1 with
// an O(1/N^3) tail.
double ml_span_sum(int truncation);

// Residual of the minimal-uncertainty equation the ML states solve,
//   [X_sym - xi + i hbar (1 + beta dp^2)/(2 dp^2) p] psi^ML_xi(p)
// at the minimal-length configuration <p> = 0, dp = 1/sqrt(beta); identically
// zero up to rounding.
Complex ml_ode_residual(double xi, double p, const ModelParams& params);

}  // namespace gup

#endif  // GUP_MAXLOC_HPP
