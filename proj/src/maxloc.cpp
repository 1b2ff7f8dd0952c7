#include "gup/maxloc.hpp"

#include <cmath>
#include <stdexcept>

#include "gup/operators.hpp"

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double ml_overlap_analytic(double xi, double xi_prime, const ModelParams& params) {
  params.validate();
  const double x = (xi_prime - xi) / (2.0 * params.length_scale());
  const double ax = std::abs(x);

  if (ax < 1e-6) {
    // sin(pi x)/(pi x (1-x^2)) = 1 + x^2 (1 - pi^2/6) + O(x^4)
    return 1.0 + x * x * (1.0 - kPi * kPi / 6.0);
  }
  if (std::abs(ax - 1.0) < 1e-6) {
    // expand about |x| = 1 with u = |x| - 1:
    // sin(pi x)/(pi(x - x^3)) = (1 - (pi u)^2/6) / ((1+u)(2+u))
    const double u = ax - 1.0;
    const double pu = kPi * u;
    return (1.0 - pu * pu / 6.0) / ((1.0 + u) * (2.0 + u));
  }
  return std::sin(kPi * x) / (kPi * (x - x * x * x));
}

double ml_eigen_overlap_analytic(double xi_eigen, double xi_ml, const ModelParams& params) {
  params.validate();
  const double d = (xi_ml - xi_eigen) / params.length_scale();
  const double ad = std::abs(d);
  const double c = 2.0 * std::sqrt(2.0);

  if (std::abs(ad - 1.0) < 1e-6) {
    // u = |d| - 1:  2 sqrt2 cos(pi d/2)/(pi(1-d^2)) = sqrt2 (1-(pi u/2)^2/6)/(2+u)
    const double u = ad - 1.0;
    const double pu = 0.5 * kPi * u;
    return std::sqrt(2.0) * (1.0 - pu * pu / 6.0) / (2.0 + u);
  }
  return c * std::cos(0.5 * kPi * d) / (kPi * (1.0 - d * d));
}

double ml_span_sum(int truncation) {
  if (truncation < 0) throw std::invalid_argument("ml_span_sum: truncation must be >= 0");
  auto term = [](int m) {
    const double q = 4.0 * static_cast<double>(m) * m - 1.0;
    return 8.0 / (kPi * kPi * q * q);
  };
  // ascending |m|, negative first
  double sum = term(0);
  for (int m = 1; m <= truncation; ++m) {
    sum += term(-m);
    sum += term(m);
  }
  return sum;
}

Complex ml_ode_residual(double xi, double p, const ModelParams& params) {
  params.validate();
  const double dp_min = params.momentum_scale();        // Delta p = 1/sqrt(beta)
  const double dp2 = dp_min * dp_min;
  const Complex coeff{0.0, params.hbar * (1.0 + params.beta * dp2) / (2.0 * dp2)};

  StateSpec state = MaxLoc{xi};
  const Complex psi = evaluate(state, params, p);
  const Complex xpsi = apply(OperatorKind::XSym, state, params, p);
  return xpsi - xi * psi + coeff * p * psi;
}

}  // namespace gup
