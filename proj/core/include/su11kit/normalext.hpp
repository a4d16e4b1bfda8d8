#pragma once

// Normal extension of A (lambda > 1) or of A^* (0 < lambda < 1) on
// H_lambda (x) H', H' the representation with lowest weight |lambda - 1|:
//   Atilde = Z (x) I' + B (x) F',   Z = A or A^*,   B = E+^{-1},
//   F' = -(1/2)(L0' - lambda') + L+',
// with the auxiliary vacuum phi in the kernel of F'^*.
//
// Tensor vectors are indexed i * d_aux + j; viewed as d x d_aux matrices
// Psi, (X (x) Y) Psi = X Psi Y^T.

#include "su11kit/bosonreal.hpp"
#include "su11kit/su11core.hpp"

#include <cstdint>
#include <vector>

namespace su11kit {

struct AuxiliaryF {
  ComplexMatrix f;          ///< -(1/2)(L0' - lambda') + L+'
  ComplexMatrix f_adjoint;  ///< -(1/2)(L0' - lambda') - L-'
};

/// aux.lambda() must equal |lambda_primary - 1| to 1e-12.
AuxiliaryF build_auxiliary_F(const BargmannSpace& aux, double lambda_primary);

enum class ExtensionMode { extend_A, extend_A_adjoint };

/// Condition numbers of E+ above this abort the construction.
inline constexpr double kEplusConditionCap = 1e8;

struct ExtensionTriplet {
  BargmannSpace primary_space;
  BargmannSpace aux_space;
  ExtensionMode mode;
  ComplexVector phi;     ///< aux basis 0
  ComplexMatrix z;       ///< A or A^*
  ComplexMatrix b;       ///< E+^{-1}
  ComplexMatrix eplus;
  AuxiliaryF f;
  double eplus_condition = 0.0;

  /// Dense Atilde (d * d_aux square); kept out of the struct since it is the
  /// one large object of the construction.
  ComplexMatrix atilde() const;
  /// Atilde Psi without forming Atilde.
  ComplexVector apply(const ComplexVector& psi) const;
  ComplexVector apply_adjoint(const ComplexVector& psi) const;
};

/// Requires lambda > 1 for extend_A and 0 < lambda < 1 for extend_A_adjoint,
/// and d * d_aux <= 4096. The aux space copies the primary dim and boundary.
/// Throws ToleranceError when cond(E+) > 1e8.
ExtensionTriplet build_normal_extension(const BargmannSpace& primary,
                                        ExtensionMode mode);

/// A tensor operator given as a sum of Kronecker products.
struct KroneckerTerm {
  ComplexMatrix left;
  ComplexMatrix right;
};
using KroneckerSum = std::vector<KroneckerTerm>;

/// ||[T, T^*] chi|| / ||chi|| for chi = (E+^2 (x) I) e_m (x) e_j over interior
/// m, j; entry (m, j) of the result.
RealMatrix normality_residuals(const KroneckerSum& t, const ComplexMatrix& eplus,
                               Index primary_interior, Index aux_interior);

/// Extension of the primary operator: Z (x) I + B (x) F.
KroneckerSum extension_terms(const ExtensionTriplet& t);

/// S = Tr_aux((I (x) phi phi^*) Atilde Atilde^*), from the Kronecker terms.
ComplexMatrix second_moment_operator(const ExtensionTriplet& t);

/// Normality on domain vectors, its monotonicity in the boundary margin, the
/// single-space commutators [A, A^*] and [A, B] with the sign of [A, A^*],
/// the auxiliary F identities, and the moment conditions tr Atilde(rho (x)
/// phi phi^*) = tr Z rho and tr Atilde Atilde^*(rho (x) phi phi^*) = tr Z Z^* rho
/// for each seed, together with their phi-expectation forms.
VerificationReport verify_extension(const ExtensionTriplet& t,
                                    const std::vector<std::uint64_t>& seeds,
                                    double tol_scale = 1.0);

/// Eigenvalue floor and interior size of S - Z Z^*, and tr rho S = tr rho Z Z^*.
VerificationReport second_moment_check(const ExtensionTriplet& t,
                                       const std::vector<std::uint64_t>& seeds,
                                       double tol_scale = 1.0);

/// PQ^{-1} (x) I' + c Q^{-2} (x) (n_b' + a_b'^{*2}) on odd (x) even parity
/// sectors for c = +i and c = -i/4, compared with the abstract extension at
/// lambda = 3/2.
VerificationReport pq_realization_check(const FockBasisSpec& fock,
                                        double tol_scale = 1.0);

}  // namespace su11kit
