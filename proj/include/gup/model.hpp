#ifndef GUP_MODEL_HPP
#define GUP_MODEL_HPP

#include <cmath>
#include <stdexcept>

namespace gup {

// Physical constants of the deformed commutator [X,P] = i*hbar*(1 + beta*p^2).
// beta has units of inverse momentum squared, hbar of action; together they fix
// the length scale hbar*sqrt(beta) (the minimal length) and the momentum scale
// 1/sqrt(beta). Defaults are natural units beta = hbar = 1.
struct ModelParams {
  double beta = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta))
      throw std::invalid_argument("ModelParams: beta must be positive and finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
      throw std::invalid_argument("ModelParams: hbar must be positive and finite");
  }

  // minimal length hbar*sqrt(beta)
  double length_scale() const { return hbar * std::sqrt(beta); }
  // momentum scale 1/sqrt(beta)
  double momentum_scale() const { return 1.0 / std::sqrt(beta); }
};

// Which inner product: Standard is plain Lebesgue dp, KMM carries the
// (1 + beta*p^2)^-1 weight.
enum class Measure { Standard, KMM };

inline double measure_weight(Measure m, const ModelParams& params, double p) {
  if (m == Measure::KMM) return 1.0 / (1.0 + params.beta * p * p);
  return 1.0;
}

inline const char* measure_name(Measure m) {
  return m == Measure::KMM ? "kmm" : "standard";
}

}  // namespace gup

#endif  // GUP_MODEL_HPP
