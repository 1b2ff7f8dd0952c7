#include "gup/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;

// exp(-i*theta) as a complex value
inline Complex phase(double theta) { return {std::cos(theta), -std::sin(theta)}; }

}  // namespace

GridState::GridState(std::vector<double> p, std::vector<Complex> amplitude)
    : p_(std::move(p)), amp_(std::move(amplitude)) {
  if (p_.size() != amp_.size())
    throw std::invalid_argument("GridState: sample/amplitude size mismatch");
  if (p_.size() < 4)
    throw std::invalid_argument("GridState: need at least 4 samples for cubic interpolation");
  for (std::size_t i = 1; i < p_.size(); ++i)
    if (!(p_[i] > p_[i - 1]))
      throw std::invalid_argument("GridState: samples must be strictly increasing in p");
}

std::size_t GridState::segment(double p) const {
  if (p < p_.front() || p > p_.back())
    throw std::out_of_range("GridState: p outside sample range");
  // index of the 4-point stencil start: p in [p_[j], p_[j+1]], stencil j-1..j+2
  auto it = std::upper_bound(p_.begin(), p_.end(), p);
  std::size_t j = (it == p_.begin()) ? 0 : static_cast<std::size_t>(it - p_.begin()) - 1;
  if (j >= p_.size() - 1) j = p_.size() - 2;
  std::size_t start = (j == 0) ? 0 : j - 1;
  if (start + 3 >= p_.size()) start = p_.size() - 4;
  return start;
}

Complex GridState::value(double p) const {
  std::size_t s = segment(p);
  // Lagrange cubic through the 4 stencil nodes
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    double w = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k == i) continue;
      w *= (p - p_[s + k]) / (p_[s + i] - p_[s + k]);
    }
    acc += w * amp_[s + i];
  }
  return acc;
}

Complex GridState::derivative(double p) const {
  std::size_t s = segment(p);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    // d/dp of the i-th Lagrange basis polynomial
    double denom = 1.0;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i) denom *= (p_[s + i] - p_[s + k]);
    double num = 0.0;
    for (std::size_t m = 0; m < 4; ++m) {
      if (m == i) continue;
      double term = 1.0;
      for (std::size_t k = 0; k < 4; ++k) {
        if (k == i || k == m) continue;
        term *= (p - p_[s + k]);
      }
      num += term;
    }
    acc += (num / denom) * amp_[s + i];
  }
  return acc;
}

Complex evaluate(const StateSpec& state, const ModelParams& params, double p) {
  const double beta = params.beta;
  const double sb = std::sqrt(beta);
  const double w = 1.0 + beta * p * p;

  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SymEigen>) {
          double norm = std::sqrt(sb / kPi);
          double theta = s.xi * std::atan(sb * p) / (params.hbar * sb);
          return norm / std::sqrt(w) * phase(theta);
        } else if constexpr (std::is_same_v<T, KmmEigen>) {
          double norm = std::sqrt(sb / kPi);
          double theta = s.xi * std::atan(sb * p) / (params.hbar * sb);
          return norm * phase(theta);
        } else if constexpr (std::is_same_v<T, MaxLoc>) {
          double norm = std::sqrt(2.0 * sb / kPi);
          double theta = s.xi * std::atan(sb * p) / (params.hbar * sb);
          return norm / w * phase(theta);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          double norm = std::pow(kPi * s.sigma * s.sigma, -0.25);
          double u = (p - s.p0) / s.sigma;
          return norm * std::exp(-0.5 * u * u) * phase(p * s.x0 / params.hbar);
        } else {
          return s.value(p);
        }
      },
      state);
}

Complex evaluate_derivative(const StateSpec& state, const ModelParams& params, double p) {
  const double beta = params.beta;
  const double sb = std::sqrt(beta);
  const double w = 1.0 + beta * p * p;
  const Complex i{0.0, 1.0};

  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SymEigen>) {
          // d/dp log(psi) = (-beta*p - i*lambda*sqrt(beta)) / (1 + beta*p^2)
          double lambda = s.xi / (params.hbar * sb);
          Complex logd = (-beta * p - i * lambda * sb) / w;
          return logd * evaluate(state, params, p);
        } else if constexpr (std::is_same_v<T, KmmEigen>) {
          double lambda = s.xi / (params.hbar * sb);
          Complex logd = (-i * lambda * sb) / w;
          return logd * evaluate(state, params, p);
        } else if constexpr (std::is_same_v<T, MaxLoc>) {
          double lambda = s.xi / (params.hbar * sb);
          Complex logd = (-2.0 * beta * p - i * lambda * sb) / w;
          return logd * evaluate(state, params, p);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          Complex logd = -(p - s.p0) / (s.sigma * s.sigma) - i * s.x0 / params.hbar;
          return logd * evaluate(state, params, p);
        } else {
          return s.derivative(p);
        }
      },
      state);
}

std::optional<Support> support(const StateSpec& state) {
  if (const auto* g = std::get_if<GridState>(&state))
    return Support{g->p_min(), g->p_max()};
  return std::nullopt;
}

double phase_frequency(const StateSpec& state, const ModelParams& params) {
  const double scale = params.hbar * std::sqrt(params.beta);
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SymEigen> || std::is_same_v<T, KmmEigen> ||
                      std::is_same_v<T, MaxLoc>) {
          return s.xi / scale;
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return s.x0 / scale;
        } else {
          return 0.0;
        }
      },
      state);
}

std::optional<double> state_xi(const StateSpec& state) {
  return std::visit(
      [](const auto& s) -> std::optional<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SymEigen> || std::is_same_v<T, KmmEigen> ||
                      std::is_same_v<T, MaxLoc>) {
          return s.xi;
        } else {
          return std::nullopt;
        }
      },
      state);
}

std::string state_label(const StateSpec& state) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SymEigen>) {
          return "sym-eigen(xi=" + std::to_string(s.xi) + ")";
        } else if constexpr (std::is_same_v<T, KmmEigen>) {
          return "kmm-eigen(xi=" + std::to_string(s.xi) + ")";
        } else if constexpr (std::is_same_v<T, MaxLoc>) {
          return "maxloc(xi=" + std::to_string(s.xi) + ")";
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return "gaussian(sigma=" + std::to_string(s.sigma) + ",p0=" + std::to_string(s.p0) +
                 ",x0=" + std::to_string(s.x0) + ")";
        } else {
          return "grid(" + std::to_string(s.grid().size()) + " samples)";
        }
      },
      state);
}

GridState make_odd_gaussian_grid(const Gaussian& g, const ModelParams& params,
                                 double half_width, std::size_t n_points) {
  if (n_points < 4) throw std::invalid_argument("make_odd_gaussian_grid: n_points < 4");
  std::vector<double> p(n_points);
  std::vector<Complex> amp(n_points);
  const double h = 2.0 * half_width / static_cast<double>(n_points - 1);
  double norm2 = 0.0;
  for (std::size_t k = 0; k < n_points; ++k) {
    p[k] = -half_width + static_cast<double>(k) * h;
    amp[k] = p[k] * evaluate(g, params, p[k]);
    norm2 += std::norm(amp[k]) * h;  // trapezoid; endpoints are negligible
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amp) a *= scale;
  return GridState(std::move(p), std::move(amp));
}

}  // namespace gup
