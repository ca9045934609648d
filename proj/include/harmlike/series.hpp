#ifndef HARMLIKE_SERIES_HPP
#define HARMLIKE_SERIES_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "harmlike/rational.hpp"

namespace harmlike {

using Complex = std::complex<double>;

// Result of summing a truncated power series.
struct SeriesResult {
  Complex value{0.0, 0.0};
  unsigned terms_used = 0;
  double last_term_magnitude = 0.0;
  bool converged = false;
};

enum class FunctionId { si2, cos_si, shi2, cosh_shi, si_ref, shi_ref };

const char* to_string(FunctionId id);
// Parses "si2", "cossi", "cos_si", "shi2", "coshshi", "cosh_shi",
// "si_ref", "shi_ref". Throws std::invalid_argument on unknown names.
FunctionId parse_function_id(const std::string& name);

// Exact rational coefficient table: (power of z, coefficient) pairs in
// increasing power order.
struct SeriesCoefficients {
  FunctionId function_id;
  std::vector<std::pair<unsigned, Rational>> coefficients;
};

inline constexpr unsigned kSeriesHardCap = 500;

// Si(z) = int_0^z sin(x)/x dx by its Maclaurin series
// sum_k (-1)^k z^{2k+1} / ((2k+1)(2k+1)!). Entire, valid for complex z.
// Independent of the H_n(1/2) machinery.
Complex si_reference(Complex z);

// Shi(z) = int_0^z sinh(x)/x dx, the all-positive-term counterpart.
Complex shi_reference(Complex z);

// {Si(z)}^2 = sum_{n>=1} (-1)^{n+1} H_{2n}(1/2) (2z)^{2n} / ((2n)!(2n)).
// Terms built by multiplicative update; stops after two consecutive
// terms below tol*max(1,|partial|), or at the 500-term hard cap with
// converged = false.
SeriesResult si_squared_series(Complex z, double tol);

// 2 cos(z) Si(z) = sum_{n>=1} (-1)^{n+1} H_{2n-1}(1/2) (2z)^{2n-1} / (2n-1)!.
SeriesResult cos_si_series(Complex z, double tol);

// {Shi(z)}^2: hyperbolic analogue, all terms positive.
SeriesResult shi_squared_series(Complex z, double tol);

// 2 cosh(z) Shi(z): hyperbolic analogue, all terms positive.
SeriesResult cosh_shi_series(Complex z, double tol);

// Exact rational coefficients of the chosen series up to term index
// n_max (powers up to 2*n_max for the even series, 2*n_max-1 for the
// odd ones). The four H-based ids draw on harmonic_like_exact(1/2, .);
// si_ref/shi_ref are the plain Maclaurin tables.
SeriesCoefficients exact_coefficients(FunctionId id, unsigned n_max);

// The same tables computed without H_n(1/2): exact Cauchy products of
// the Si/Shi/cos/cosh Maclaurin series. Independent oracle for
// exact_coefficients.
SeriesCoefficients cauchy_product_oracle(FunctionId id, unsigned n_max);

}  // namespace harmlike

#endif  // HARMLIKE_SERIES_HPP
