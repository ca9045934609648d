#ifndef HARMLIKE_HARMONIC_HPP
#define HARMLIKE_HARMONIC_HPP

#include <complex>
#include <vector>

#include "harmlike/rational.hpp"

namespace harmlike {

using Complex = std::complex<double>;

// H_n(a) = sum_{p=1}^{n} a^{n-p}/p, the harmonic-like number generalizing
// the classical harmonic number (a = 1). H_0(a) = 0 (empty sum).

// Horner evaluation of the finite sum, highest power first.
// Throws std::invalid_argument if a is not finite.
Complex harmonic_like_direct(Complex a, unsigned n);

// [H_1(a), ..., H_nmax(a)] via the recurrence H_n = a*H_{n-1} + 1/n.
std::vector<Complex> harmonic_like_sequence(Complex a, unsigned n_max);

// Exact rational value of the sum for rational a.
Rational harmonic_like_exact(const Rational& a, unsigned n);

// H_n(1/2) by the halving recurrence H_n = H_{n-1}/2 + 1/n.
// Stable for arbitrarily large n (never forms 2^k).
double harmonic_half(unsigned n);

// Integral form H_n(a) = int_0^1 (a^n - t^n)/(a - t) dt evaluated by
// Gauss-Legendre quadrature with `nodes` points. The integrand is a
// degree-(n-1) polynomial in disguise, so nodes >= ceil(n/2)+1 makes the
// result exact up to round-off; fewer nodes is an invalid argument.
// Nodes falling within 2^-40 * max(1,|a|) of t = a use the polynomial
// form of the integrand (the singularity at t = a is removable).
double harmonic_like_integral(double a, unsigned n, unsigned nodes);

// H_n(1/2) = 2^-n int_0^1 ((1+x)^n - (1-x)^n)/x dx, evaluated exactly by
// expanding the integrand (only odd binomial terms survive) and
// integrating term by term. Requires n >= 1.
Rational harmonic_half_integral_exact(unsigned n);

}  // namespace harmlike

#endif  // HARMLIKE_HARMONIC_HPP
