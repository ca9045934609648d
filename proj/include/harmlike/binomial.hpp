#ifndef HARMLIKE_BINOMIAL_HPP
#define HARMLIKE_BINOMIAL_HPP

#include <vector>

#include "harmlike/rational.hpp"

namespace harmlike {

enum class StaverVariant { from_p0, from_p1 };

// One exact check of the inverse-binomial identity at index n.
struct IdentityReport {
  unsigned n = 0;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  StaverVariant variant = StaverVariant::from_p0;
};

// Exact binomial coefficient by the multiplicative running product.
BigInt binomial(unsigned n, unsigned k);

// sum 1/C(n,p) for p from (0 or 1) to n, exact. Requires n >= 1.
Rational inverse_binomial_sum(unsigned n, bool include_p0);

// (n+1) * 2^-(n+1) * sum_{k=1}^{n+1} 2^k/k, exact. Equals
// (n+1) * H_{n+1}(1/2). Requires n >= 1.
Rational staver_rhs(unsigned n);

// For each n in 1..n_max, compares inverse_binomial_sum against
// staver_rhs under both lower bounds. The p=0 form is the one that
// holds; the p=1 form undercounts by exactly 1/C(n,0) = 1.
std::vector<IdentityReport> verify_staver(unsigned n_max);

// H_{n+1}(1/2) = (1/(n+1)) * sum_{p=0}^{n} 1/C(n,p), exact. n >= 1.
Rational harmonic_half_from_binomials(unsigned n);

}  // namespace harmlike

#endif  // HARMLIKE_BINOMIAL_HPP
