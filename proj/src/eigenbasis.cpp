#include "gup/eigenbasis.hpp"

#include <cmath>
#include <random>
#include <string>

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

}  // namespace

const char* family_name(StateFamily family) {
  switch (family) {
    case StateFamily::SymEigen: return "sym-eigen";
    case StateFamily::KmmEigen: return "kmm-eigen";
    case StateFamily::MaxLoc: return "maxloc";
  }
  return "?";
}

StateSpec make_family_state(StateFamily family, double xi) {
  switch (family) {
    case StateFamily::SymEigen: return SymEigen{xi};
    case StateFamily::KmmEigen: return KmmEigen{xi};
    case StateFamily::MaxLoc: return MaxLoc{xi};
  }
  throw std::invalid_argument("make_family_state: unknown family");
}

GramMatrix::GramMatrix(LatticeSpec lattice, Measure measure, std::vector<Complex> row,
                       double max_error_estimate, long evaluations)
    : lattice_(lattice),
      measure_(measure),
      row_(std::move(row)),
      max_error_estimate_(max_error_estimate),
      evaluations_(evaluations) {}

Complex GramMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw std::out_of_range("GramMatrix::at: index outside window");
  // entry (i, j) = <state_i | state_j>; row_ holds separations j - i >= 0
  return (j >= i) ? row_[j - i] : std::conj(row_[i - j]);
}

double GramMatrix::max_deviation_from_identity() const {
  double dev = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      const Complex target = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      dev = std::max(dev, std::abs(at(i, j) - target));
    }
  return dev;
}

double GramMatrix::max_entrywise_difference(const GramMatrix& other) const {
  if (other.size() != size())
    throw std::invalid_argument("GramMatrix: size mismatch in comparison");
  double dev = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) dev = std::max(dev, std::abs(at(i, j) - other.at(i, j)));
  return dev;
}

double eigen_overlap_analytic(double xi, double xi_prime, const ModelParams& params) {
  params.validate();
  const double scale = params.length_scale();
  const double separation = xi_prime - xi;
  const double y = separation * kPi / (2.0 * scale);
  if (std::abs(separation) < 1e-6 * scale) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
  }
  return std::sin(y) / y;
}

GramMatrix gram_matrix(const LatticeSpec& lattice, StateFamily family, Measure measure,
                       const ModelParams& params, const QuadratureConfig& cfg) {
  lattice.validate();
  params.validate();
  const int size = lattice.size();

  std::vector<Complex> row(size);
  double max_err = 0.0;
  long evals = 0;
  for (int m = 0; m < size; ++m) {
    StateSpec a = make_family_state(family, lattice.xi(lattice.n_min, params));
    StateSpec b = make_family_state(family, lattice.xi(lattice.n_min + m, params));
    IntegralResult r = inner_product(a, b, measure, params, cfg);
    evals += r.evaluations;
    if (!r.converged)
      throw QuadratureError(std::string("gram_matrix: entry (") +
                                std::to_string(lattice.n_min) + ", " +
                                std::to_string(lattice.n_min + m) + ") for " +
                                family_name(family) + "/" + measure_name(measure) +
                                " did not converge",
                            r);
    row[m] = r.value;
    max_err = std::max(max_err, r.error_estimate);
  }

  GramMatrix gram(lattice, measure, std::move(row), max_err, evals);

  // honesty check on the Toeplitz fill: re-derive a few entries directly
  std::mt19937 rng(0x67757031u);
  std::uniform_int_distribution<int> pick(0, size - 1);
  const int checks = std::min(10, size * size);
  for (int c = 0; c < checks; ++c) {
    const int i = pick(rng);
    const int j = pick(rng);
    StateSpec a = make_family_state(family, lattice.xi(lattice.n_min + i, params));
    StateSpec b = make_family_state(family, lattice.xi(lattice.n_min + j, params));
    IntegralResult direct = inner_product(a, b, measure, params, cfg);
    const double tol = 50.0 * (direct.error_estimate + gram.max_error_estimate()) + 1e-12;
    if (std::abs(direct.value - gram.at(i, j)) > tol)
      throw QuadratureError("gram_matrix: Toeplitz fill failed spot check at (" +
                                std::to_string(lattice.n_min + i) + ", " +
                                std::to_string(lattice.n_min + j) + ")",
                            direct);
  }
  return gram;
}

double parseval_sum(double target_xi, int truncation, const ModelParams& params) {
  params.validate();
  if (truncation < 0) throw std::invalid_argument("parseval_sum: truncation must be >= 0");
  const double scale = params.length_scale();
  // reduced offset: target_xi = (2n' + eps) * scale with eps in [-1, 1]
  const double eps = std::remainder(target_xi / scale, 2.0);
  // sin^2((2m+eps) pi/2) = sin^2(eps pi/2) for every integer m
  const double s2 = std::sin(eps * kHalfPi) * std::sin(eps * kHalfPi);

  auto term = [&](int m) {
    const double u = 2.0 * m + eps;
    if (u == 0.0) return 1.0;  // sinc limit at the coincident lattice site
    return (4.0 / (kPi * kPi)) * s2 / (u * u);
  };

  // ascending |m|, negative first
  double sum = term(0);
  for (int m = 1; m <= truncation; ++m) {
    sum += term(-m);
    sum += term(m);
  }
  return sum;
}

Complex unitary_map_image(const StateSpec& state, const ModelParams& params, double t) {
  params.validate();
  if (!(std::abs(t) < kHalfPi))
    throw std::domain_error("unitary_map_image: t must lie strictly inside (-pi/2, pi/2)");
  const double sb = std::sqrt(params.beta);
  const double sec = 1.0 / std::cos(t);
  return std::pow(params.beta, -0.25) * sec * evaluate(state, params, std::tan(t) / sb);
}

IsometryCheck verify_isometry(const StateSpec& f, const StateSpec& g,
                              const ModelParams& params, const QuadratureConfig& cfg) {
  params.validate();
  IsometryCheck check;
  Integrand mapped = [&](double t) {
    return std::conj(unitary_map_image(f, params, t)) * unitary_map_image(g, params, t);
  };
  check.mapped = integrate_interval(mapped, -kHalfPi, kHalfPi, cfg);

  Integrand direct = [&](double p) {
    return std::conj(evaluate(f, params, p)) * evaluate(g, params, p);
  };
  check.direct = integrate_real_line(direct, params, cfg);
  return check;
}

}  // namespace gup
