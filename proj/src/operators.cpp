#include "gup/operators.hpp"

#include <cmath>
#include <limits>

namespace gup {

const char* operator_name(OperatorKind op) {
  switch (op) {
    case OperatorKind::XSym: return "x-sym";
    case OperatorKind::XKmm: return "x-kmm";
    case OperatorKind::P: return "p";
    case OperatorKind::PSquared: return "p^2";
    case OperatorKind::OneBetaP2: return "1+beta*p^2";
  }
  return "?";
}

Complex apply(OperatorKind op, const StateSpec& state, const ModelParams& params, double p) {
  params.validate();
  const double w = 1.0 + params.beta * p * p;
  const Complex ih{0.0, params.hbar};
  switch (op) {
    case OperatorKind::XSym: {
      const Complex psi = evaluate(state, params, p);
      const Complex dpsi = evaluate_derivative(state, params, p);
      return ih * (w * dpsi + params.beta * p * psi);
    }
    case OperatorKind::XKmm: {
      const Complex dpsi = evaluate_derivative(state, params, p);
      return ih * w * dpsi;
    }
    case OperatorKind::P:
      return p * evaluate(state, params, p);
    case OperatorKind::PSquared:
      return p * p * evaluate(state, params, p);
    case OperatorKind::OneBetaP2:
      return w * evaluate(state, params, p);
  }
  throw std::invalid_argument("apply: unknown operator");
}

Complex commutator_residual(OperatorKind position_op, const StateSpec& state,
                            const ModelParams& params, double p) {
  params.validate();
  if (position_op != OperatorKind::XSym && position_op != OperatorKind::XKmm)
    throw std::invalid_argument("commutator_residual: position_op must be XSym or XKmm");

  const double beta = params.beta;
  const double w = 1.0 + beta * p * p;
  const Complex ih{0.0, params.hbar};
  const Complex psi = evaluate(state, params, p);
  const Complex dpsi = evaluate_derivative(state, params, p);

  // X(p psi) with d/dp(p psi) = psi + p psi'
  Complex x_p_psi, p_x_psi;
  if (position_op == OperatorKind::XSym) {
    x_p_psi = ih * (w * (psi + p * dpsi) + beta * p * (p * psi));
    p_x_psi = p * (ih * (w * dpsi + beta * p * psi));
  } else {
    x_p_psi = ih * (w * (psi + p * dpsi));
    p_x_psi = p * (ih * w * dpsi);
  }
  return (x_p_psi - p_x_psi) - ih * w * psi;
}

IntegralResult symmetry_defect(OperatorKind op, Measure measure, const StateSpec& psi,
                               const StateSpec& phi, const ModelParams& params,
                               const QuadratureConfig& cfg) {
  params.validate();
  Integrand forward = [&](double p) {
    return std::conj(evaluate(psi, params, p)) * apply(op, phi, params, p) *
           measure_weight(measure, params, p);
  };
  Integrand backward = [&](double p) {
    return std::conj(apply(op, psi, params, p)) * evaluate(phi, params, p) *
           measure_weight(measure, params, p);
  };

  auto sa = support(psi);
  auto sb = support(phi);
  IntegralResult lhs, rhs;
  if (sa || sb) {
    double lo = std::max(sa ? sa->lo : -std::numeric_limits<double>::infinity(),
                         sb ? sb->lo : -std::numeric_limits<double>::infinity());
    double hi = std::min(sa ? sa->hi : std::numeric_limits<double>::infinity(),
                         sb ? sb->hi : std::numeric_limits<double>::infinity());
    if (!(hi > lo)) return IntegralResult{};
    lhs = integrate_real_line(forward, params, cfg, lo, hi);
    rhs = integrate_real_line(backward, params, cfg, lo, hi);
  } else {
    lhs = integrate_real_line(forward, params, cfg);
    rhs = integrate_real_line(backward, params, cfg);
  }

  IntegralResult defect;
  defect.value = lhs.value - rhs.value;
  defect.error_estimate = lhs.error_estimate + rhs.error_estimate;
  defect.evaluations = lhs.evaluations + rhs.evaluations;
  defect.converged = lhs.converged && rhs.converged;
  return defect;
}

namespace {

IntegralResult moment_integral(const Integrand& f, const StateSpec& state,
                               const ModelParams& params, const QuadratureConfig& cfg,
                               const char* name) {
  IntegralResult r;
  if (auto s = support(state)) {
    r = integrate_real_line(f, params, cfg, s->lo, s->hi);
  } else {
    r = integrate_real_line(f, params, cfg);
  }
  if (!r.converged)
    throw MomentError(name, std::string("gup_check: moment ") + name + " did not converge", r);
  return r;
}

}  // namespace

UncertaintyReport gup_check(const StateSpec& state, const ModelParams& params,
                            const QuadratureConfig& cfg) {
  params.validate();
  UncertaintyReport report;

  Integrand density = [&](double p) { return Complex{std::norm(evaluate(state, params, p)), 0.0}; };
  IntegralResult norm2;
  if (auto s = support(state)) {
    norm2 = integrate_real_line(density, params, cfg, s->lo, s->hi);
  } else {
    norm2 = integrate_real_line(density, params, cfg);
  }
  if (!norm2.converged || !(norm2.value.real() > 0.0))
    throw MomentError("norm", "gup_check: state is not normalizable under the Standard measure",
                      norm2);
  const double n2 = norm2.value.real();

  Integrand p_density = [&](double p) {
    return Complex{p * std::norm(evaluate(state, params, p)), 0.0};
  };
  Integrand p2_density = [&](double p) {
    return Complex{p * p * std::norm(evaluate(state, params, p)), 0.0};
  };
  IntegralResult mp = moment_integral(p_density, state, params, cfg, "<p>");
  IntegralResult mp2 = moment_integral(p2_density, state, params, cfg, "<p^2>");
  report.mean_p = mp.value.real() / n2;
  report.mean_p2 = mp2.value.real() / n2;
  report.mean_p_err = mp.error_estimate / n2;
  report.mean_p2_err = mp2.error_estimate / n2;

  Integrand x_density = [&](double p) {
    return std::conj(evaluate(state, params, p)) * apply(OperatorKind::XSym, state, params, p);
  };
  IntegralResult mx = moment_integral(x_density, state, params, cfg, "<X>");
  report.mean_X = mx.value.real() / n2;
  report.mean_X_err = mx.error_estimate / n2;

  // dX^2 = ||(X - <X>) psi||^2 / ||psi||^2, centered before squaring
  const double mean_x = report.mean_X;
  Integrand centered = [&](double p) {
    const Complex r =
        apply(OperatorKind::XSym, state, params, p) - mean_x * evaluate(state, params, p);
    return Complex{std::norm(r), 0.0};
  };
  IntegralResult dx2 = moment_integral(centered, state, params, cfg, "<(X-<X>)^2>");
  const double var_x = dx2.value.real() / n2;

  const double var_p = report.mean_p2 - report.mean_p * report.mean_p;
  report.delta_X = std::sqrt(std::max(var_x, 0.0));
  report.delta_p = std::sqrt(std::max(var_p, 0.0));
  report.delta_X_err = dx2.error_estimate / n2;
  report.lhs = report.delta_X * report.delta_p;
  report.rhs = 0.5 * params.hbar * (1.0 + params.beta * report.mean_p2);
  report.evaluations =
      norm2.evaluations + mp.evaluations + mp2.evaluations + mx.evaluations + dx2.evaluations;
  return report;
}

}  // namespace gup
