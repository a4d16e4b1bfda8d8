#include "su11kit/quadrature.hpp"

#include <cmath>

namespace su11kit {

QuadratureRule gauss_jacobi_unit(Index n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi_unit: need at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi_unit: exponents must exceed -1");
  }
  const double a = alpha;
  const double b = beta;
  const double ab = a + b;

  // Jacobi matrix of the monic recurrence on [-1, 1].
  RealMatrix jacobi = RealMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    jacobi(k, k) = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k + 1 < n) {
      const double m = kk + 1.0;
      const double t = 2.0 * m + ab;
      const double beta_m =
          m == 1.0 ? 4.0 * (1.0 + a) * (1.0 + b) / (t * t * (t + 1.0))
                   : 4.0 * m * (m + a) * (m + b) * (m + ab) /
                         (t * t * (t + 1.0) * (t - 1.0));
      jacobi(k, k + 1) = jacobi(k + 1, k) = std::sqrt(beta_m);
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw ToleranceError("gauss_jacobi_unit: eigensolver failed");
  }

  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                         std::lgamma(b + 1.0) - std::lgamma(ab + 2.0);
  const double mu0_unit = std::exp(log_mu0 - (ab + 1.0) * std::log(2.0));

  QuadratureRule rule{RealVector(n), RealVector(n)};
  for (Index k = 0; k < n; ++k) {
    const double x = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.nodes(k) = 0.5 * (1.0 + x);
    rule.weights(k) = mu0_unit * v0 * v0;
  }
  return rule;
}

}  // namespace su11kit
