#pragma once

// The affine-group realization on L2(R+) in momentum space: P is
// multiplication by p, Q = i d/dp by central differences, and
//   E0 = -i(PQ + QP),  E+ = iP,  E- = -i(QPQ + k^2 P^{-1}),
// which carries the lambda = 2k + 1 representation with lowest weight vector
// H_k(p) proportional to p^k e^{-p}.
//
// Grid vectors hold sqrt(h) phi(p_j). Residual norms skip the first and last
// kWaveletBoundary rows.

#include "su11kit/coherent.hpp"

#include <utility>

namespace su11kit {

inline constexpr Index kWaveletBoundary = 8;

class WaveletParams {
 public:
  /// k > 0.
  explicit WaveletParams(double k);
  double k() const { return k_; }
  double lambda() const { return 2.0 * k_ + 1.0; }
  /// Casimir value 4k^2 - 1.
  double beta() const { return 4.0 * k_ * k_ - 1.0; }

 private:
  double k_;
};

/// Points p_j = (j + 1/2) h, j = 0..N-1, with N h = pmax.
class HalfLineGrid {
 public:
  /// N >= 1024.
  HalfLineGrid(Index count, double pmax);

  Index size() const { return count_; }
  double spacing() const { return spacing_; }
  double pmax() const { return spacing_ * static_cast<double>(count_); }
  const RealVector& points() const { return points_; }

  /// Throws DomainError unless pmax >= 20 (k + 1).
  void require_containment(const WaveletParams& params) const;

 private:
  Index count_;
  double spacing_;
  RealVector points_;
};

/// Matrix-free E and L operators of the realization.
class WaveletOperators {
 public:
  WaveletOperators(const WaveletParams& params, const HalfLineGrid& grid,
                   int order = 8);

  const WaveletParams& params() const { return params_; }
  const HalfLineGrid& grid() const { return grid_; }
  int order() const { return order_; }

  ComplexVector q(const ComplexVector& v) const;
  ComplexVector p(const ComplexVector& v) const;
  ComplexVector p_inverse(const ComplexVector& v) const;

  ComplexVector e0(const ComplexVector& v) const;
  ComplexVector eplus(const ComplexVector& v) const;
  ComplexVector eminus(const ComplexVector& v) const;

  /// L0 = i(E- - E+), L+- = (E0 +- i(E+ + E-)) / 2.
  ComplexVector l0(const ComplexVector& v) const;
  ComplexVector lplus(const ComplexVector& v) const;
  ComplexVector lminus(const ComplexVector& v) const;
  ComplexVector casimir(const ComplexVector& v) const;

  /// -(Q - ik P^{-1}), whose vacuum eigenvalue is i.
  ComplexVector operator_A(const ComplexVector& v) const;
  /// -2(Q - ik P^{-1}).
  ComplexVector printed_A_first(const ComplexVector& v) const;
  /// -P^{-1}(PQ + QP - (2k+1) i).
  ComplexVector printed_A_second(const ComplexVector& v) const;

 private:
  WaveletParams params_;
  HalfLineGrid grid_;
  int order_;
  RealVector stencil_;
};

struct WaveletTriples {
  SkewTriple skew;
  LadderTriple ladder;
};

/// Dense triples, for grids of at most 2048 points.
WaveletTriples build_wavelet_triple(const WaveletParams& params,
                                    const HalfLineGrid& grid, int order = 8);

/// H_k(p) = p^k e^{-p} / sqrt(Gamma(2k+1) / 2^{2k+1}).
ComplexVector vacuum_Hk(const WaveletParams& params, const HalfLineGrid& grid);

/// Normalized p^k e^{-p} L_n^{(2k)}(2p), the image of |n>, n <= 12.
ComplexVector wavelet_number_state(const WaveletParams& params,
                                   const HalfLineGrid& grid, Index n);

/// Dense -(Q - ik P^{-1}), for grids of at most 2048 points.
ComplexMatrix wavelet_A_operator(const WaveletParams& params,
                                 const HalfLineGrid& grid, int order = 8);

/// Unitary dilation phi(p) -> e^t phi(e^{2t} p) by Lagrange interpolation of
/// the given order. Throws DomainError when more than 1e-10 of the mass would
/// leave the grid.
ComplexVector dilate(const HalfLineGrid& grid, const ComplexVector& v, double t,
                     int interpolation_order = 6);

/// Multiplication by e^{isp}, i.e. exp(s E+).
ComplexVector shift(const HalfLineGrid& grid, const ComplexVector& v, double s);

/// exp(sE+)exp(tE0)H_k (normal) or exp(tE0)exp(sE+)H_k (antinormal) with the
/// predicted eigenvalue e^{2t}i + s or e^{2t}(i + s).
std::pair<ComplexVector, Complex> wavelet_affine_state(
    const WaveletParams& params, const HalfLineGrid& grid, double s, double t,
    Ordering ordering);

/// ||v|| over rows [kWaveletBoundary, N - kWaveletBoundary).
double wavelet_interior_norm(const ComplexVector& v);

/// Vacuum, Casimir, commutator, ladder, operator A and affine eigenvalue
/// checks for one k. Number-state checks use n <= n_max on a grid with the
/// same point count widened to hold the n_max state.
VerificationReport wavelet_checks(const WaveletParams& params,
                                  const HalfLineGrid& grid, Index n_max = 12,
                                  double tol_scale = 1.0);

/// Suffix "@k=<k>".
std::string k_tag(double k);

}  // namespace su11kit
