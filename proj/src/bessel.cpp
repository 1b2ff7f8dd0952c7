#include "gup/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// K0(x) = -(log(x/2) + gamma) * I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 * H_k
double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;    // (x^2/4)^k / (k!)^2, k = 0
  double i0 = 1.0;
  double hk = 0.0;      // harmonic number H_k
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    i0 += term;
    sum += term * hk;
    if (term * (hk + 1.0) < 1e-18 * (sum + 1.0)) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + sum;
}

// Steed/Thompson-Barnett CF2 evaluation specialized to nu = 0:
//   K0(x) = sqrt(pi/(2x)) * exp(-x) / S(x),  x >= 2.
double k0_continued_fraction(double x) {
  constexpr double eps = 1e-16;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;  // 1/4 - nu^2 at nu = 0
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) {
      return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    }
  }
  throw std::runtime_error("bessel_k0: continued fraction failed to converge");
}

}  // namespace

double bessel_k0(double x) {
  if (!(x > 0.0))
    throw std::domain_error("bessel_k0: requires x > 0 (K0 diverges at the origin)");
  if (x <= 2.0) return k0_series(x);
  return k0_continued_fraction(x);
}

}  // namespace gup
