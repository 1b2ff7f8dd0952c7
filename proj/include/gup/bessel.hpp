#ifndef GUP_BESSEL_HPP
#define GUP_BESSEL_HPP

namespace gup {

// Modified Bessel function of the second kind, order zero, for x > 0.
// Power series below x = 2, Thompson-Barnett continued fraction above;
// relative accuracy ~1e-14 across the range. Throws std::domain_error for
// x <= 0 (K0 diverges logarithmically at the origin).
double bessel_k0(double x);

}  // namespace gup

#endif  // GUP_BESSEL_HPP
