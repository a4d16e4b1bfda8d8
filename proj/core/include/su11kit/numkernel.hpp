#pragma once

// Dense complex linear algebra shared by every module: value types, the
// matrix exponential, shift pseudo-inverse, Kronecker product, partial trace,
// interior (truncation-aware) norms and seeded random density matrices.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace su11kit {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or domain invariant was violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (signals a construction bug or a
/// truncation that is too small for the requested accuracy).
class ToleranceError : public Error {
 public:
  using Error::Error;
};

enum class NormKind { frobenius, spectral };

/// Largest dimension accepted for a Kronecker product result.
inline constexpr Index kDefaultKroneckerCap = 4096;

/// 1-norm bound under which the Pade scaling-and-squaring route is used.
inline constexpr double kExpNormCap = 50.0;

void require_square(const ComplexMatrix& m, std::string_view what);
void require_finite(const ComplexMatrix& m, std::string_view what);
void require_finite(const ComplexVector& v, std::string_view what);

/// Truncation margin used when none is given: max(4, d/8).
Index default_boundary(Index dim);

/// exp(m). Inputs with 1-norm <= 50 go through Pade scaling-and-squaring.
/// Larger inputs are accepted only when skew-Hermitian, where the Hermitian
/// eigendecomposition gives a unitary result at full accuracy.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

/// Left inverse of a matrix whose only nonzeros sit on the first
/// subdiagonal: result(n, n+1) = 1 / m(n+1, n), everything else zero.
ComplexMatrix shift_pseudo_inverse(const ComplexMatrix& m);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b,
                        Index cap = kDefaultKroneckerCap);

/// Tr_B of an operator on C^{dim_a} (x) C^{dim_b} (row index = i*dim_b + j).
ComplexMatrix partial_trace_second(const ComplexMatrix& m, Index dim_a,
                                   Index dim_b);

/// Norm of the leading (d - boundary) square block.
double interior_residual_norm(const ComplexMatrix& m, Index boundary,
                              NormKind kind = NormKind::frobenius);

/// Norm of the block indexed by (i, j) with i < dim_a - boundary_a and
/// j < dim_b - boundary_b on both sides of a tensor-space operator.
double tensor_interior_norm(const ComplexMatrix& m, Index dim_a, Index dim_b,
                            Index boundary_a, Index boundary_b,
                            NormKind kind = NormKind::frobenius);

/// Positive semidefinite, unit-trace matrix drawn from the Ginibre ensemble.
/// Bit-identical for identical (dim, seed).
ComplexMatrix random_density(Index dim, std::uint64_t seed);

/// Seeded complex Gaussian vector (unnormalized).
ComplexVector random_vector(Index dim, std::uint64_t seed);

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexVector basis_vector(Index dim, Index n);

/// exp(t m) for a fixed skew-Hermitian m and many values of t, from one
/// Hermitian eigendecomposition of -i m.
class UnitaryFlow {
 public:
  explicit UnitaryFlow(const ComplexMatrix& skew);

  ComplexVector apply(double t, const ComplexVector& v) const;
  ComplexMatrix matrix(double t) const;
  Index dim() const { return vectors_.rows(); }

 private:
  ComplexMatrix vectors_;
  RealVector frequencies_;
};

double spectral_norm(const ComplexMatrix& m);

/// c_1..c_m of the antisymmetric central first-derivative stencil of even
/// order 2m (2 <= order <= 16).
RealVector central_difference_stencil(int order);

/// First derivative of uniformly spaced samples by the stencil above, with
/// zero values assumed outside the grid.
ComplexVector central_difference(const ComplexVector& v, const RealVector& stencil,
                                 double spacing);

}  // namespace su11kit
