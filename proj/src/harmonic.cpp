#include "harmlike/harmonic.hpp"

#include <cmath>
#include <stdexcept>

#include "harmlike/binomial.hpp"
#include "harmlike/quadrature.hpp"

namespace harmlike {

namespace {

bool is_finite(Complex a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

}  // namespace

Complex harmonic_like_direct(Complex a, unsigned n) {
  if (!is_finite(a)) {
    throw std::invalid_argument("harmonic_like_direct: a must be finite");
  }
  // Horner from the a^{n-1} coefficient down: the coefficient of a^{n-p}
  // is 1/p, so fold in 1/1, 1/2, ..., 1/n.
  Complex value(0.0, 0.0);
  for (unsigned p = 1; p <= n; ++p) {
    value = value * a + 1.0 / static_cast<double>(p);
  }
  return value;
}

std::vector<Complex> harmonic_like_sequence(Complex a, unsigned n_max) {
  if (!is_finite(a)) {
    throw std::invalid_argument("harmonic_like_sequence: a must be finite");
  }
  std::vector<Complex> out;
  out.reserve(n_max);
  Complex h(0.0, 0.0);  // H_0
  for (unsigned n = 1; n <= n_max; ++n) {
    h = a * h + 1.0 / static_cast<double>(n);
    out.push_back(h);
  }
  return out;
}

Rational harmonic_like_exact(const Rational& a, unsigned n) {
  Rational h = 0;
  for (unsigned p = 1; p <= n; ++p) {
    h = a * h + Rational(1, p);
  }
  return h;
}

double harmonic_half(unsigned n) {
  double h = 0.0;
  for (unsigned k = 1; k <= n; ++k) {
    h = 0.5 * h + 1.0 / static_cast<double>(k);
  }
  return h;
}

double harmonic_like_integral(double a, unsigned n, unsigned nodes) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("harmonic_like_integral: a must be finite");
  }
  // The integrand is a degree-(n-1) polynomial; m-node Gauss-Legendre is
  // exact through degree 2m-1, so ceil(n/2)+1 nodes suffice.
  if (nodes < (n + 1) / 2 + 1) {
    throw std::invalid_argument("harmonic_like_integral: need at least ceil(n/2)+1 nodes");
  }
  if (n == 0) return 0.0;

  const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
  const double delta = std::ldexp(std::max(1.0, std::abs(a)), -40);

  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    double f;
    if (std::abs(a - t) < delta) {
      // Removable singularity: switch to the polynomial form
      // sum_{j=0}^{n-1} a^{n-1-j} t^j (Horner in t, coefficients built
      // from the t^{n-1} end where the a-power is a^0).
      double poly = 0.0;
      double apow = 1.0;
      for (unsigned j = 0; j < n; ++j) {
        poly = poly * t + apow;
        apow *= a;
      }
      f = poly;
    } else {
      f = (std::pow(a, static_cast<double>(n)) -
           std::pow(t, static_cast<double>(n))) /
          (a - t);
    }
    sum += rule.weights[i] * f;
  }
  return sum;
}

Rational harmonic_half_integral_exact(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("harmonic_half_integral_exact: n must be >= 1");
  }
  // (1+x)^n - (1-x)^n = 2 * sum over odd p of C(n,p) x^p, so dividing by
  // x and integrating over [0,1] leaves 2 * sum over odd p of C(n,p)/p.
  Rational sum = 0;
  for (unsigned p = 1; p <= n; p += 2) {
    sum += Rational(2 * binomial(n, p), p);
  }
  BigInt two_n = BigInt(1) << n;
  return sum / Rational(two_n);
}

}  // namespace harmlike
