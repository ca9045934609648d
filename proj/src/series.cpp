#include "harmlike/series.hpp"

#include <cmath>
#include <stdexcept>

#include "harmlike/harmonic.hpp"

namespace harmlike {

namespace {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_args(Complex z, double tol, const char* who) {
  if (!is_finite(z)) {
    throw std::invalid_argument(std::string(who) + ": z must be finite");
  }
  if (!(tol > 0.0 && tol < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": tol must be in (0,1)");
  }
}

// Shared engine for the four H_n(1/2)-based expansions. Even series:
// terms F_n * H_{2n}(1/2) with F_n = (2z)^{2n}/((2n)!(2n)). Odd series:
// F_n * H_{2n-1}(1/2) with F_n = (2z)^{2n-1}/(2n-1)!. Everything is
// carried by multiplicative updates; H steps by the halving recurrence.
// Terms and the partial sum live in long double: the alternating series
// cancel against peak terms of order e^{2|z|}, which costs ~2|z| digits
// of the accumulation precision.
SeriesResult h_half_series(Complex z, double tol, bool even_powers,
                           bool alternating) {
  using ComplexL = std::complex<long double>;
  const ComplexL zl(z.real(), z.imag());
  const ComplexL w2 = (2.0L * zl) * (2.0L * zl);
  ComplexL factor;      // F_n, updated multiplicatively
  long double h = 0.0L;  // H_m(1/2), stepped to the subscript of term n
  unsigned m = 0;
  long double sign = 1.0L;

  auto step_h = [&](unsigned target) {
    while (m < target) {
      ++m;
      h = 0.5L * h + 1.0L / static_cast<long double>(m);
    }
  };

  SeriesResult res;
  ComplexL sum = 0.0L;
  unsigned small_streak = 0;
  for (unsigned n = 1; n <= kSeriesHardCap; ++n) {
    if (n == 1) {
      factor = even_powers ? w2 * 0.25L : 2.0L * zl;  // (2z)^2/(2!*2) or (2z)/1!
    } else if (even_powers) {
      const long double tn = 2.0L * n;
      factor *= w2 / (tn * (tn - 1.0L)) * ((tn - 2.0L) / tn);
    } else {
      const long double tn = 2.0L * n;
      factor *= w2 / ((tn - 1.0L) * (tn - 2.0L));
    }
    step_h(even_powers ? 2 * n : 2 * n - 1);
    const ComplexL t = sign * factor * h;
    if (alternating) sign = -sign;

    sum += t;
    res.terms_used = n;
    const long double t_mag = std::abs(t);
    res.last_term_magnitude = static_cast<double>(t_mag);
    if (t_mag <= tol * std::max(1.0L, std::abs(sum))) {
      if (++small_streak >= 2) {
        res.converged = true;
        break;
      }
    } else {
      small_streak = 0;
    }
  }
  res.value = Complex(static_cast<double>(sum.real()),
                      static_cast<double>(sum.imag()));
  return res;
}

// Maclaurin engine for Si/Shi: sum of (+/-1)^k z^{2k+1}/((2k+1)(2k+1)!).
Complex integral_sine_like(Complex z, bool alternating) {
  if (!is_finite(z)) {
    throw std::invalid_argument("si/shi reference: z must be finite");
  }
  const Complex z2 = z * z;
  Complex u = z;  // z^{2k+1}/(2k+1)!, the sin/sinh series term
  Complex sum = 0.0;
  double sign = 1.0;
  unsigned small_streak = 0;
  for (unsigned k = 0; k < kSeriesHardCap; ++k) {
    if (k > 0) {
      u *= z2 / (2.0 * k * (2.0 * k + 1.0));
      if (alternating) sign = -sign;
    }
    const Complex t = sign * u / (2.0 * k + 1.0);
    sum += t;
    if (std::abs(t) <= 1e-17 * std::max(1.0, std::abs(sum))) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
  }
  return sum;
}

}  // namespace

Complex si_reference(Complex z) { return integral_sine_like(z, true); }

Complex shi_reference(Complex z) { return integral_sine_like(z, false); }

SeriesResult si_squared_series(Complex z, double tol) {
  check_args(z, tol, "si_squared_series");
  return h_half_series(z, tol, /*even_powers=*/true, /*alternating=*/true);
}

SeriesResult cos_si_series(Complex z, double tol) {
  check_args(z, tol, "cos_si_series");
  return h_half_series(z, tol, /*even_powers=*/false, /*alternating=*/true);
}

SeriesResult shi_squared_series(Complex z, double tol) {
  check_args(z, tol, "shi_squared_series");
  return h_half_series(z, tol, /*even_powers=*/true, /*alternating=*/false);
}

SeriesResult cosh_shi_series(Complex z, double tol) {
  check_args(z, tol, "cosh_shi_series");
  return h_half_series(z, tol, /*even_powers=*/false, /*alternating=*/false);
}

const char* to_string(FunctionId id) {
  switch (id) {
    case FunctionId::si2: return "si2";
    case FunctionId::cos_si: return "cos_si";
    case FunctionId::shi2: return "shi2";
    case FunctionId::cosh_shi: return "cosh_shi";
    case FunctionId::si_ref: return "si_ref";
    case FunctionId::shi_ref: return "shi_ref";
  }
  return "?";
}

FunctionId parse_function_id(const std::string& name) {
  if (name == "si2") return FunctionId::si2;
  if (name == "cossi" || name == "cos_si") return FunctionId::cos_si;
  if (name == "shi2") return FunctionId::shi2;
  if (name == "coshshi" || name == "cosh_shi") return FunctionId::cosh_shi;
  if (name == "si_ref") return FunctionId::si_ref;
  if (name == "shi_ref") return FunctionId::shi_ref;
  throw std::invalid_argument("unknown function id: " + name);
}

SeriesCoefficients exact_coefficients(FunctionId id, unsigned n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("exact_coefficients: n_max must be >= 1");
  }
  SeriesCoefficients table{id, {}};
  table.coefficients.reserve(n_max);

  const Rational half(1, 2);
  const bool even = (id == FunctionId::si2 || id == FunctionId::shi2);
  const bool odd_h = (id == FunctionId::cos_si || id == FunctionId::cosh_shi);
  const bool alternating = (id == FunctionId::si2 || id == FunctionId::cos_si);

  if (even || odd_h) {
    BigInt factorial = 1;   // (2n)! or (2n-1)!
    BigInt pow2 = 1;        // 2^{2n} or 2^{2n-1}
    unsigned fact_arg = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
      const unsigned subscript = even ? 2 * n : 2 * n - 1;
      while (fact_arg < subscript) {
        ++fact_arg;
        factorial *= fact_arg;
        pow2 *= 2;
      }
      const Rational h = harmonic_like_exact(half, subscript);
      Rational coeff = Rational(pow2) * h / Rational(factorial);
      if (even) coeff /= Rational(2 * n);
      if (alternating && n % 2 == 0) coeff = -coeff;
      table.coefficients.emplace_back(subscript, coeff);
    }
    return table;
  }

  // si_ref / shi_ref: Maclaurin coefficients of Si / Shi.
  const bool alt_ref = (id == FunctionId::si_ref);
  BigInt factorial = 1;  // (2k+1)!
  for (unsigned k = 0; k < n_max; ++k) {
    if (k > 0) factorial *= BigInt(2 * k) * BigInt(2 * k + 1);
    Rational coeff = Rational(1, BigInt(2 * k + 1) * factorial);
    if (alt_ref && k % 2 == 1) coeff = -coeff;
    table.coefficients.emplace_back(2 * k + 1, coeff);
  }
  return table;
}

namespace {

enum class BaseFunction { sine_integral, sinh_integral, cosine, cosh };

// Exact Maclaurin coefficients up to power `max_power` inclusive,
// indexed by power; absent powers are zero.
std::vector<Rational> maclaurin_table(BaseFunction fn, unsigned max_power) {
  std::vector<Rational> c(max_power + 1, Rational(0));
  const bool integral = (fn == BaseFunction::sine_integral ||
                         fn == BaseFunction::sinh_integral);
  const bool alternating =
      (fn == BaseFunction::sine_integral || fn == BaseFunction::cosine);
  BigInt factorial = 1;
  unsigned fact_arg = 0;
  for (unsigned p = integral ? 1 : 0; p <= max_power; p += 2) {
    while (fact_arg < p) {
      ++fact_arg;
      factorial *= fact_arg;
    }
    // Si/Shi: 1/(p * p!) at p = 2k+1; cos/cosh: 1/p! at p = 2k.
    Rational coeff = integral ? Rational(1, BigInt(p) * factorial)
                              : Rational(1, factorial);
    if (alternating && (p / 2) % 2 == 1) coeff = -coeff;
    c[p] = coeff;
  }
  return c;
}

}  // namespace

SeriesCoefficients cauchy_product_oracle(FunctionId id, unsigned n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("cauchy_product_oracle: n_max must be >= 1");
  }
  if (id == FunctionId::si_ref || id == FunctionId::shi_ref) {
    return exact_coefficients(id, n_max);
  }

  const bool even = (id == FunctionId::si2 || id == FunctionId::shi2);
  const unsigned max_power = even ? 2 * n_max : 2 * n_max - 1;
  const bool hyperbolic =
      (id == FunctionId::shi2 || id == FunctionId::cosh_shi);

  const auto sine_int = maclaurin_table(hyperbolic
                                            ? BaseFunction::sinh_integral
                                            : BaseFunction::sine_integral,
                                        max_power);
  // Even ids square the integral function; odd ids pair it with cos/cosh
  // (the factor 2 of 2cos(z)Si(z) is folded in after the convolution).
  const auto other =
      even ? sine_int
           : maclaurin_table(
                 hyperbolic ? BaseFunction::cosh : BaseFunction::cosine,
                 max_power);

  SeriesCoefficients table{id, {}};
  for (unsigned m = even ? 2 : 1; m <= max_power; m += 2) {
    Rational coeff = 0;
    for (unsigned i = 0; i <= m; ++i) {
      if (sine_int[i] == 0 || other[m - i] == 0) continue;
      coeff += sine_int[i] * other[m - i];
    }
    if (!even) coeff *= 2;
    table.coefficients.emplace_back(m, coeff);
  }
  return table;
}

}  // namespace harmlike
