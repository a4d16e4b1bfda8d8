#pragma once

// Truncated positive-discrete-series representation of su(1,1) in the
// number-state basis |n>, n = 0..d-1, together with the ladder triple
// (L0, L+, L-), the anti-Hermitian triple (E0, E+, E-), the number operator,
// the nonlinear annihilator a and its Mobius conjugate A.

#include "su11kit/numkernel.hpp"
#include "su11kit/report.hpp"

namespace su11kit {

/// Representation label lambda > 0 (lowest L0 eigenvalue) with a truncation
/// dimension d >= 8 and an interior margin boundary < d/2.
class BargmannSpace {
 public:
  BargmannSpace(double lambda, Index dim);
  BargmannSpace(double lambda, Index dim, Index boundary);

  double lambda() const { return lambda_; }
  Index dim() const { return dim_; }
  Index boundary() const { return boundary_; }
  Index interior() const { return dim_ - boundary_; }

 private:
  double lambda_;
  Index dim_;
  Index boundary_;
};

struct LadderTriple {
  ComplexMatrix l0;
  ComplexMatrix lplus;
  ComplexMatrix lminus;
};

struct SkewTriple {
  ComplexMatrix e0;
  ComplexMatrix eplus;
  ComplexMatrix eminus;
};

/// L0 = diag(lambda + 2n), <n+1|L+|n> = sqrt((n+1)(lambda+n)), L- = -L+^*.
LadderTriple build_ladder_triple(const BargmannSpace& space);

/// E0 = L+ + L-, E+- = +-(i/2)(L0 -+ L+ +- L-).
SkewTriple convert_basis(const LadderTriple& l);
/// L0 = i(E- - E+), L+- = (E0 +- i(E+ + E-)) / 2.
LadderTriple convert_basis(const SkewTriple& e);

/// L0^2 + 2(L+L- + L-L+).
ComplexMatrix casimir_operator(const LadderTriple& l);

/// (0,0) entry of the Casimir. Throws ToleranceError when the Casimir (or its
/// two reordered forms) is not scalar on the interior block to 1e-9.
double casimir_scalar(const LadderTriple& l, Index boundary);

/// N = (L0 - lambda) / 2 = diag(0, 1, ..., d-1).
ComplexMatrix number_operator(const BargmannSpace& space);

/// a = (1/2) L+^+ (L0 - lambda): <n-1|a|n> = sqrt(n / (n + lambda - 1)).
ComplexMatrix annihilator_a(const BargmannSpace& space);

/// A = -i (a + 1)(a - 1)^{-1}, computed by a triangular solve. With
/// cross_check set, also builds (1/2) E+^{-1}(E0 - lambda) and throws
/// ToleranceError if the interior blocks differ by more than 1e-6.
ComplexMatrix operator_A(const BargmannSpace& space, bool cross_check = false);

/// Interior Frobenius distance between the Mobius form of A and
/// (1/2) E+^{-1}(E0 - lambda).
double operator_A_cross_check(const BargmannSpace& space);

/// Interior residuals of every algebraic identity of the construction:
/// commutators, adjoint relations, Casimir, ladder matrix elements, the
/// diagonal products a^*a and aa^*, the (E0, E+, a) intertwining identity,
/// both reordering closed forms and the record of the printed reordering
/// formula's disagreement at n = 0.
VerificationReport verify_structure(const BargmannSpace& space,
                                    double tol_scale = 1.0);

/// Suffix appended to check ids, e.g. "@lambda=1.5".
std::string lambda_tag(double lambda);

}  // namespace su11kit
