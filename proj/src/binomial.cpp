#include "harmlike/binomial.hpp"

#include <stdexcept>

namespace harmlike {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // C(n,i) = C(n,i-1) * (n-i+1) / i, exact at every step.
  for (unsigned i = 1; i <= k; ++i) {
    result *= (n - i + 1);
    result /= i;
  }
  return result;
}

Rational inverse_binomial_sum(unsigned n, bool include_p0) {
  if (n == 0) {
    throw std::invalid_argument("inverse_binomial_sum: n must be >= 1");
  }
  Rational sum = 0;
  for (unsigned p = include_p0 ? 0 : 1; p <= n; ++p) {
    sum += Rational(1, binomial(n, p));
  }
  return sum;
}

Rational staver_rhs(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("staver_rhs: n must be >= 1");
  }
  Rational sum = 0;
  BigInt pow2 = 1;
  for (unsigned k = 1; k <= n + 1; ++k) {
    pow2 *= 2;
    sum += Rational(pow2, k);
  }
  return Rational(n + 1, BigInt(1) << (n + 1)) * sum;
}

std::vector<IdentityReport> verify_staver(unsigned n_max) {
  std::vector<IdentityReport> reports;
  reports.reserve(2 * n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    const Rational rhs = staver_rhs(n);
    for (StaverVariant v : {StaverVariant::from_p0, StaverVariant::from_p1}) {
      IdentityReport r;
      r.n = n;
      r.variant = v;
      r.lhs = inverse_binomial_sum(n, v == StaverVariant::from_p0);
      r.rhs = rhs;
      r.holds = (r.lhs == r.rhs);
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

Rational harmonic_half_from_binomials(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("harmonic_half_from_binomials: n must be >= 1");
  }
  return inverse_binomial_sum(n, /*include_p0=*/true) / Rational(n + 1);
}

}  // namespace harmlike
