#pragma once

#include "su11kit/numkernel.hpp"

namespace su11kit {

struct QuadratureRule {
  RealVector nodes;
  RealVector weights;
};

/// Gauss-Jacobi rule on [0, 1] for the weight (1-u)^alpha u^beta, built by
/// Golub-Welsch. Exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_jacobi_unit(Index n, double alpha, double beta = 0.0);

/// Gauss-Legendre rule on [0, 1].
inline QuadratureRule gauss_legendre_unit(Index n) {
  return gauss_jacobi_unit(n, 0.0, 0.0);
}

}  // namespace su11kit
