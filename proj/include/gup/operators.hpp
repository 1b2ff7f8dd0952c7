#ifndef GUP_OPERATORS_HPP
#define GUP_OPERATORS_HPP

#include <complex>
#include <string>

#include "gup/model.hpp"
#include "gup/quadrature.hpp"
#include "gup/states.hpp"

namespace gup {

// Momentum-space actions:
//   XSym      i hbar [(1 + beta p^2) d/dp + beta p]     (x + beta p x p, expanded)
//   XKmm      i hbar (1 + beta p^2) d/dp
//   P         multiplication by p
//   PSquared  multiplication by p^2
//   OneBetaP2 multiplication by (1 + beta p^2)
enum class OperatorKind { XSym, XKmm, P, PSquared, OneBetaP2 };

const char* operator_name(OperatorKind op);

// Pointwise (O psi)(p), using the analytic derivative for closed forms and the
// interpolant derivative for grids.
Complex apply(OperatorKind op, const StateSpec& state, const ModelParams& params, double p);

// ([X, p] psi)(p) - i hbar (1 + beta p^2) psi(p) for position_op in
// {XSym, XKmm}; an algebraic identity, so the result is rounding noise.
Complex commutator_residual(OperatorKind position_op, const StateSpec& state,
                            const ModelParams& params, double p);

// <psi|O phi> - <O psi|phi> under the chosen measure. Vanishes for
// (XSym, Standard), (XKmm, KMM) and P under either measure; for
// (XKmm, Standard) it equals -2 i hbar beta <psi|p|phi>.
IntegralResult symmetry_defect(OperatorKind op, Measure measure, const StateSpec& psi,
                               const StateSpec& phi, const ModelParams& params,
                               const QuadratureConfig& cfg);

struct UncertaintyReport {
  double mean_X = 0.0;
  double mean_p = 0.0;
  double mean_p2 = 0.0;
  double delta_X = 0.0;
  double delta_p = 0.0;
  double lhs = 0.0;  // delta_X * delta_p
  double rhs = 0.0;  // (hbar/2)(1 + beta <p^2>)
  // propagated quadrature error estimates
  double mean_X_err = 0.0;
  double mean_p_err = 0.0;
  double mean_p2_err = 0.0;
  double delta_X_err = 0.0;
  long evaluations = 0;
};

// Moment divergence shows up as a quadrature failure on the named moment.
class MomentError : public QuadratureError {
 public:
  MomentError(const std::string& moment, const std::string& msg, IntegralResult best)
      : QuadratureError(msg, best), moment_(moment) {}
  const std::string& moment() const { return moment_; }

 private:
  std::string moment_;
};

// Uncertainty report for X_sym and p under the Standard measure. Moments are
// centered before squaring: dX^2 = ||(X - <X>) psi||^2. Throws MomentError when
// the state is not normalizable or a moment integral diverges.
UncertaintyReport gup_check(const StateSpec& state, const ModelParams& params,
                            const QuadratureConfig& cfg);

}  // namespace gup

#endif  // GUP_OPERATORS_HPP
