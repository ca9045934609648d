#include "harmlike/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace harmlike {

namespace {

// P_m(x) and P_m'(x) via the three-term recurrence.
std::pair<double, double> legendre(unsigned m, double x) {
  double p0 = 1.0, p1 = 0.0;
  for (unsigned j = 0; j < m; ++j) {
    double p2 = p1;
    p1 = p0;
    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
  }
  double dp = m * (x * p0 - p1) / (x * x - 1.0);
  return {p0, dp};
}

}  // namespace

QuadratureRule gauss_legendre(unsigned m) {
  if (m == 0) {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  if (m == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }

  // Roots of P_m by Newton iteration; only the lower half is computed,
  // the rest follows by symmetry.
  const unsigned half = (m + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, dp] = legendre(m, x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    const double dp = legendre(m, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(unsigned m, double a, double b) {
  QuadratureRule rule = gauss_legendre(m);
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  for (unsigned i = 0; i < m; ++i) {
    rule.nodes[i] = mid + hw * rule.nodes[i];
    rule.weights[i] *= hw;
  }
  return rule;
}

}  // namespace harmlike
