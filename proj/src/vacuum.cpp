#include "gup/vacuum.hpp"

#include <cmath>
#include <stdexcept>

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;

double radial_prefactor() { return 1.0 / (2.0 * kPi * kPi); }

Integrand radial_integrand(const VacuumParams& vp, bool modified) {
  const double m2 = vp.mass * vp.mass;
  const double beta = vp.model.beta;
  return [m2, beta, modified](double p) {
    double value = 0.5 * std::sqrt(p * p + m2) * p * p;
    if (modified) {
      const double w = 1.0 + beta * p * p;
      value /= w * w * w;
    }
    return Complex{value, 0.0};
  };
}

}  // namespace

IntegralResult vacuum_energy_density(const VacuumParams& vp, bool modified,
                                     const QuadratureConfig& cfg) {
  vp.validate();
  if (!modified && !vp.cutoff)
    throw std::invalid_argument(
        "vacuum_energy_density: divergent integral; the unmodified measure requires a cutoff");

  Integrand f = radial_integrand(vp, modified);
  IntegralResult r;
  if (vp.cutoff) {
    r = integrate_interval(f, 0.0, *vp.cutoff, cfg);
  } else {
    r = integrate_half_line(f, vp.model.momentum_scale(), cfg);
  }
  r.value *= radial_prefactor();
  r.error_estimate *= radial_prefactor();
  return r;
}

DivergenceScan divergence_scan(const VacuumParams& vp, const std::vector<double>& cutoffs,
                               const QuadratureConfig& cfg) {
  vp.validate();
  if (cutoffs.size() < 4)
    throw std::invalid_argument("divergence_scan: need at least 4 cutoffs");
  double lo = cutoffs.front(), hi = cutoffs.front();
  for (double c : cutoffs) {
    if (!(c > 0.0)) throw std::invalid_argument("divergence_scan: cutoffs must be positive");
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (hi / lo < 100.0)
    throw std::invalid_argument("divergence_scan: cutoffs must span at least two decades");
  if (vp.mass > 0.0 && lo < 5.0 * vp.mass)
    throw std::invalid_argument("divergence_scan: cutoffs must sit well above the mass");

  DivergenceScan scan;
  scan.cutoffs = cutoffs;
  scan.densities.reserve(cutoffs.size());
  for (double c : cutoffs) {
    VacuumParams point = vp;
    point.cutoff = c;
    scan.densities.push_back(vacuum_energy_density(point, /*modified=*/false, cfg));
  }

  // least squares on (log cutoff, log density)
  const auto n = static_cast<double>(cutoffs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    const double x = std::log(cutoffs[i]);
    const double y = std::log(scan.densities[i].value.real());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  scan.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return scan;
}

}  // namespace gup
