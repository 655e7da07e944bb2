// bessel.hpp -- modified Bessel functions of the second kind, orders 0 and 1.

#ifndef TWRC_BESSEL_HPP
#define TWRC_BESSEL_HPP

namespace twrc {

// K0(x) and K1(x) for x > 0, accurate to >= 12 significant digits over
// [1e-8, 700]; underflow to 0 once exp(-x) leaves the representable range.
// Throws DomainError for x <= 0.
double bessel_k0(double x);
double bessel_k1(double x);

// exp(x) * K_nu(x): removes the exponential envelope so products of the form
// exp(-b*g) * K_nu(c*g) with b >= c stay well scaled at large arguments.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

} // namespace twrc

#endif // TWRC_BESSEL_HPP
