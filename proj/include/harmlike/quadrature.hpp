#ifndef HARMLIKE_QUADRATURE_HPP
#define HARMLIKE_QUADRATURE_HPP

#include <vector>

namespace harmlike {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule with m nodes on [-1, 1], exact for polynomials of
// degree <= 2m-1. Nodes by Newton iteration on P_m.
QuadratureRule gauss_legendre(unsigned m);

// Same rule mapped to [a, b].
QuadratureRule gauss_legendre(unsigned m, double a, double b);

}  // namespace harmlike

#endif  // HARMLIKE_QUADRATURE_HPP
