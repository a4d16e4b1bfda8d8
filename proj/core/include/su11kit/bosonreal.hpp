#pragma once

// Single-mode boson realization: Fock-space a_b, n_b, Q, P; the even and odd
// parity sectors as the lambda = 1/2 and lambda = 3/2 representations;
// squeezed vacua as eigenvectors of Q^{-1}P and odd squeezed states as
// eigenvectors of PQ^{-1} on a position grid that avoids q = 0.
//
// Grid vectors hold sqrt(h) psi(q_j), so the Euclidean norm is the L2 norm.

#include "su11kit/su11core.hpp"

#include <string>
#include <utility>

namespace su11kit {

class FockBasisSpec {
 public:
  /// dim must be even and >= 16.
  explicit FockBasisSpec(Index dim);
  Index dim() const { return dim_; }

 private:
  Index dim_;
};

struct FockOperators {
  ComplexMatrix a;       ///< <n-1|a|n> = sqrt(n)
  ComplexMatrix number;  ///< a^* a
  ComplexMatrix q;       ///< (a + a^*)/sqrt(2)
  ComplexMatrix p;       ///< (a - a^*)/(i sqrt(2))
};

FockOperators fock_operators(const FockBasisSpec& spec);

enum class Parity { even, odd };

struct ParityRealization {
  BargmannSpace space;
  /// Compression of L0 = n_b + 1/2, L+ = -(1/2)a^{*2}, L- = (1/2)a^2.
  LadderTriple triple;
  /// dim x dim/2 isometry with columns (-1)^n |2n> or (-1)^n |2n+1>.
  ComplexMatrix basis_map;
};

ParityRealization parity_realization(const FockBasisSpec& spec, Parity parity);

/// Points q_j = (j + 1/2) h for j = -M..M-1.
class PositionGrid {
 public:
  /// Requires M >= 8 and M h >= 8.
  PositionGrid(Index half_count, double spacing);
  /// `count` points (even) spread over [-extent, extent].
  static PositionGrid from_points(Index count, double extent);

  Index half_count() const { return half_count_; }
  Index size() const { return 2 * half_count_; }
  double spacing() const { return spacing_; }
  double extent() const { return spacing_ * static_cast<double>(half_count_); }
  const RealVector& points() const { return points_; }

 private:
  Index half_count_;
  double spacing_;
  RealVector points_;
};

class SqueezeParams {
 public:
  /// Requires |mu|^2 - |nu|^2 = 1 to 1e-12 and |nu/mu| < 1.
  SqueezeParams(Complex mu, Complex nu);
  Complex mu() const { return mu_; }
  Complex nu() const { return nu_; }
  /// s = (mu + nu)/(mu - nu), Re s > 0.
  Complex width() const { return (mu_ + nu_) / (mu_ - nu_); }
  /// Eigenvalue of Q^{-1}P on the squeezed vacuum, i s.
  Complex eigenvalue() const { return kI * width(); }

 private:
  Complex mu_;
  Complex nu_;
};

/// Normalized samples of exp(-s q^2/2). Throws DomainError if more than
/// 1e-12 of the mass lies outside the grid.
ComplexVector squeezed_vacuum(const SqueezeParams& params,
                              const PositionGrid& grid);

/// Kernel of mu a_b + nu a_b^*: c_{2m} = -(nu/mu) sqrt((2m-1)/(2m)) c_{2m-2},
/// odd coefficients zero. Throws DomainError if the truncated coefficient
/// tail exceeds 1e-10.
ComplexVector squeezed_vacuum(const SqueezeParams& params,
                              const FockBasisSpec& spec);

/// exp(ipQ^2) exp(i tq (PQ + QP)) applied to the first Hermite function,
/// i.e. C q exp(-(e^{4 tq} - 2ip) q^2 / 2), with its PQ^{-1} eigenvalue
/// 2p + e^{4 tq} i.
std::pair<ComplexVector, Complex> odd_squeezed_state(double p, double tq,
                                                     const PositionGrid& grid);

enum class DerivativeScheme { central, spectral };

struct NonNormalOps {
  ComplexMatrix qinv_p;
  ComplexMatrix p_qinv;
  ComplexMatrix x;  ///< Q^{-1}P + PQ^{-1}
  ComplexMatrix y;  ///< i(Q^{-1}P - PQ^{-1}), the discrete counterpart of Q^{-2}
};

/// P = -i d/dq by central differences of the given even order (zero outside
/// the grid) or by Fourier differentiation. Applied matrix-free.
class GridOperators {
 public:
  explicit GridOperators(const PositionGrid& grid,
                         DerivativeScheme scheme = DerivativeScheme::central,
                         int order = 8);

  const PositionGrid& grid() const { return grid_; }
  ComplexVector derivative(const ComplexVector& v) const;
  ComplexVector p(const ComplexVector& v) const;
  ComplexVector qinv_p(const ComplexVector& v) const;
  ComplexVector p_qinv(const ComplexVector& v) const;
  ComplexVector x(const ComplexVector& v) const;
  ComplexVector y(const ComplexVector& v) const;

  /// Dense forms; intended for grids of at most a few thousand points.
  NonNormalOps dense() const;

 private:
  PositionGrid grid_;
  DerivativeScheme scheme_;
  RealVector stencil_;  ///< c_1..c_m of the antisymmetric central stencil
  RealMatrix spectral_;
};

NonNormalOps grid_nonnormal_ops(const PositionGrid& grid,
                                DerivativeScheme scheme = DerivativeScheme::central,
                                int order = 8);

/// Moments of X and Y in the state psi and the eigen-residual of Q^{-1}P.
struct UncertaintyMoments {
  Complex eigenvalue;      ///< <psi, Q^{-1}P psi>
  double eigen_residual;   ///< ||Q^{-1}P psi - eigenvalue psi||
  double var_x;
  double var_y;
  double commutator_sq;    ///< |<[X, Y]>|^2 / 4
  double defect;           ///< var_x var_y - commutator_sq
  /// Upper bound on defect implied by the eigen-residual e:
  /// var_y (dy + 2e)^2 - max(0, var_y - 2 e dy)^2, which is 8 e dy^3
  /// whenever dy >= 2e (dy = sqrt(var_y)).
  double defect_bound;
};

UncertaintyMoments uncertainty_moments(const ComplexVector& psi,
                                       const GridOperators& ops);

/// Eigen-residual of Q^{-1}P (against eigen_tol), the bound on the
/// uncertainty defect, and the Robertson inequality.
VerificationReport eigen_and_uncertainty_check(const ComplexVector& psi,
                                               const GridOperators& ops,
                                               const std::string& label,
                                               double eigen_tol,
                                               double tol_scale = 1.0);

/// Fock algebra, parity realizations, squeezed and odd squeezed states,
/// and the uncertainty equality.
VerificationReport verify_boson(const FockBasisSpec& spec,
                                const PositionGrid& grid,
                                double tol_scale = 1.0);

}  // namespace su11kit
