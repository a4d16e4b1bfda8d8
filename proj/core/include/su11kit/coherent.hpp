#pragma once

// Coherent states of the truncated representation: disk labels zeta, the
// half-plane labels eta = -i(zeta+1)/(zeta-1), affine coherent vectors built
// from exp(sE+) and exp(tE0), and quadrature checks of the disk resolution
// of identity and of the first moment of the associated POVM.

#include "su11kit/su11core.hpp"

#include <utility>
#include <vector>

namespace su11kit {

class DiskPoint {
 public:
  /// Rejects |zeta| >= 1 - 1e-12.
  explicit DiskPoint(Complex zeta);
  Complex zeta() const { return zeta_; }

 private:
  Complex zeta_;
};

class HalfPlanePoint {
 public:
  /// Rejects Im eta <= 0.
  explicit HalfPlanePoint(Complex eta);
  Complex eta() const { return eta_; }

 private:
  Complex eta_;
};

HalfPlanePoint mobius(const DiskPoint& z);
DiskPoint inverse_mobius(const HalfPlanePoint& w);

/// Radial Gauss-Jacobi rule in u = |zeta|^2 times a uniform angular rule.
struct DiskQuadrature {
  Index radial_nodes = 64;
  Index angular_nodes = 256;
};

/// Truncated coefficients (1-|z|^2)^{lambda/2} sqrt(Gamma(lambda+n)/(n! Gamma(lambda))) z^n,
/// without any tail check.
ComplexVector coherent_coefficients(const BargmannSpace& space, Complex zeta);

/// Mass of the coherent state beyond the truncation, summed directly.
double coherent_tail_mass(const BargmannSpace& space, Complex zeta);

/// Coherent state |zeta>. Throws DomainError if more than 1e-10 of its
/// mass lies beyond the truncation.
ComplexVector coherent_ket(const BargmannSpace& space, const DiskPoint& z);

/// xi(zeta) = e^{i arg zeta} artanh|zeta|, so that D(xi)|0> = |zeta>.
Complex displacement_parameter(Complex zeta);

/// exp(xi L+ + conj(xi) L-), |xi| <= 5.
ComplexMatrix displacement_operator(const BargmannSpace& space, Complex xi);

enum class Ordering { normal, antinormal };

/// Affine coherent vectors for one space, with the two one-parameter
/// groups exp(sE+) and exp(tE0) diagonalized once.
class AffineFamily {
 public:
  explicit AffineFamily(const BargmannSpace& space);

  /// exp(sE+)exp(tE0)|0> (normal) or exp(tE0)exp(sE+)|0> (antinormal) and
  /// the predicted A eigenvalue e^{2t}i + s or e^{2t}(i + s).
  std::pair<ComplexVector, HalfPlanePoint> ket(double s, double t,
                                               Ordering ordering) const;

 private:
  Index dim_;
  UnitaryFlow eplus_;
  UnitaryFlow e0_;
};

/// Requires |s| <= 5 and |t| <= 1.5.
std::pair<ComplexVector, HalfPlanePoint> affine_coherent_ket(
    const BargmannSpace& space, double s, double t, Ordering ordering);

/// Quadrature approximation of the integral of |zeta><zeta| against
/// ((lambda-1)/pi) d^2zeta / (1-|zeta|^2)^2, on the leading k x k block.
ComplexMatrix disk_frame_operator(const BargmannSpace& space,
                                  const DiskQuadrature& q, Index k);

/// Same measure with the extra factor eta(zeta); each ring is integrated by
/// trapezoid doubling until successive estimates agree to 1e-13.
ComplexMatrix disk_first_moment(const BargmannSpace& space,
                                const DiskQuadrature& q, Index k);

/// Residual of the disk resolution of identity on the k x k block plus the
/// Mobius Jacobian consistency of the two measures. Throws DomainError for
/// lambda <= 1, where no resolution of identity exists.
VerificationReport resolution_of_identity_residual(const BargmannSpace& space,
                                                   const DiskQuadrature& q,
                                                   Index k,
                                                   double tol_scale = 1.0);

/// First moment of the POVM against operator_A and zeroth moment against
/// the identity, k <= 8. Throws DomainError for lambda <= 1.
VerificationReport first_moment_operator(const BargmannSpace& space,
                                         const DiskQuadrature& q, Index k,
                                         double tol_scale = 1.0);

/// |<zeta|psi>|^2 at each point. psi must have unit norm to 1e-10.
std::vector<double> husimi_density(const BargmannSpace& space,
                                   const ComplexVector& psi,
                                   const std::vector<DiskPoint>& points);

/// Eigenvector, overlap, displacement, Mobius and affine checks. The
/// affine checks run on `affine_space` since the affine box reaches
/// |zeta| ~ 0.87.
VerificationReport verify_coherent(const BargmannSpace& space,
                                   const BargmannSpace& affine_space,
                                   double tol_scale = 1.0);

}  // namespace su11kit
