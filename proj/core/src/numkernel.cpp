#include "su11kit/numkernel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>

namespace su11kit {

namespace {

std::string with_context(std::string_view what, std::string_view message) {
  std::string out(what);
  out += ": ";
  out += message;
  return out;
}

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DomainError(with_context(what, "square matrix required"));
  }
}

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw DomainError(with_context(what, "non-finite entry"));
  }
}

void require_finite(const ComplexVector& v, std::string_view what) {
  if (!v.allFinite()) {
    throw DomainError(with_context(what, "non-finite entry"));
  }
}

Index default_boundary(Index dim) { return std::max<Index>(4, dim / 8); }

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  require_square(m, "matrix_exponential");
  require_finite(m, "matrix_exponential");
  if (m.rows() > 4096) {
    throw DomainError("matrix_exponential: dimension above 4096");
  }
  const double norm = one_norm(m);
  if (norm <= kExpNormCap) {
    return m.exp();
  }
  const double skew_defect = (m + m.adjoint()).cwiseAbs().maxCoeff();
  if (skew_defect > 1e-12 * norm) {
    throw DomainError(
        "matrix_exponential: 1-norm above 50 for a non-skew-Hermitian input");
  }
  // m = i H with H Hermitian, exp(m) = V exp(i D) V^*.
  const ComplexMatrix hermitian = -kI * m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw ToleranceError("matrix_exponential: eigensolver failed");
  }
  const RealVector& w = solver.eigenvalues();
  ComplexVector phases(w.size());
  for (Index k = 0; k < w.size(); ++k) {
    phases(k) = std::exp(kI * w(k));
  }
  const ComplexMatrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

ComplexMatrix shift_pseudo_inverse(const ComplexMatrix& m) {
  require_square(m, "shift_pseudo_inverse");
  const Index d = m.rows();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      if (i == j + 1) continue;
      if (m(i, j) != Complex(0.0)) {
        throw DomainError(
            "shift_pseudo_inverse: nonzero entry off the first subdiagonal");
      }
    }
  }
  for (Index n = 0; n + 1 < d; ++n) {
    const Complex s = m(n + 1, n);
    if (s == Complex(0.0)) {
      throw DomainError("shift_pseudo_inverse: zero subdiagonal entry");
    }
    out(n, n + 1) = 1.0 / s;
  }
  return out;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b,
                        Index cap) {
  require_square(a, "kronecker");
  require_square(b, "kronecker");
  const Index da = a.rows();
  const Index db = b.rows();
  if (da > cap / db) {
    throw DomainError("kronecker: product dimension exceeds the configured cap");
  }
  ComplexMatrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, Index dim_a,
                                   Index dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b ||
      m.cols() != dim_a * dim_b) {
    throw DomainError("partial_trace_second: dimension mismatch");
  }
  ComplexMatrix out(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double interior_residual_norm(const ComplexMatrix& m, Index boundary,
                              NormKind kind) {
  require_square(m, "interior_residual_norm");
  const Index d = m.rows();
  if (boundary < 0 || 2 * boundary >= d) {
    throw DomainError("interior_residual_norm: boundary must be below d/2");
  }
  const Index k = d - boundary;
  const auto block = m.topLeftCorner(k, k);
  return kind == NormKind::frobenius ? block.norm()
                                     : spectral_norm(ComplexMatrix(block));
}

double tensor_interior_norm(const ComplexMatrix& m, Index dim_a, Index dim_b,
                            Index boundary_a, Index boundary_b, NormKind kind) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw DomainError("tensor_interior_norm: dimension mismatch");
  }
  if (2 * boundary_a >= dim_a || 2 * boundary_b >= dim_b || boundary_a < 0 ||
      boundary_b < 0) {
    throw DomainError("tensor_interior_norm: boundary must be below d/2");
  }
  const Index ka = dim_a - boundary_a;
  const Index kb = dim_b - boundary_b;
  ComplexMatrix block(ka * kb, ka * kb);
  for (Index i = 0; i < ka; ++i) {
    for (Index j = 0; j < ka; ++j) {
      block.block(i * kb, j * kb, kb, kb) =
          m.block(i * dim_b, j * dim_b, kb, kb);
    }
  }
  return kind == NormKind::frobenius ? block.norm() : spectral_norm(block);
}

ComplexVector random_vector(Index dim, std::uint64_t seed) {
  if (dim < 1) throw DomainError("random_vector: dim must be >= 1");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix random_density(Index dim, std::uint64_t seed) {
  if (dim < 1) throw DomainError("random_density: dim must be >= 1");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return rho;
}

ComplexVector basis_vector(Index dim, Index n) {
  if (n < 0 || n >= dim) throw DomainError("basis_vector: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(n) = 1.0;
  return v;
}

UnitaryFlow::UnitaryFlow(const ComplexMatrix& skew) {
  require_square(skew, "UnitaryFlow");
  require_finite(skew, "UnitaryFlow");
  const double scale = std::max(1.0, skew.cwiseAbs().maxCoeff());
  if ((skew + skew.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("UnitaryFlow: generator is not skew-Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(ComplexMatrix(-kI * skew));
  if (solver.info() != Eigen::Success) {
    throw ToleranceError("UnitaryFlow: eigensolver failed");
  }
  vectors_ = solver.eigenvectors();
  frequencies_ = solver.eigenvalues();
}

ComplexVector UnitaryFlow::apply(double t, const ComplexVector& v) const {
  if (v.size() != dim()) throw DomainError("UnitaryFlow::apply: size mismatch");
  ComplexVector c = vectors_.adjoint() * v;
  for (Index k = 0; k < c.size(); ++k) c(k) *= std::exp(kI * (t * frequencies_(k)));
  return vectors_ * c;
}

ComplexMatrix UnitaryFlow::matrix(double t) const {
  ComplexVector phases(dim());
  for (Index k = 0; k < dim(); ++k) phases(k) = std::exp(kI * (t * frequencies_(k)));
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

RealVector central_difference_stencil(int order) {
  if (order < 2 || order % 2 != 0 || order > 16) {
    throw DomainError("central_difference_stencil: order must be even, between 2 and 16");
  }
  const int m = order / 2;
  RealVector c(m);
  for (int k = 1; k <= m; ++k) {
    const double log_mag = 2.0 * std::lgamma(m + 1.0) - std::log(k) -
                           std::lgamma(m - k + 1.0) - std::lgamma(m + k + 1.0);
    c(k - 1) = (k % 2 == 1 ? 1.0 : -1.0) * std::exp(log_mag);
  }
  return c;
}

ComplexVector central_difference(const ComplexVector& v, const RealVector& stencil,
                                 double spacing) {
  const Index n = v.size();
  const Index m = stencil.size();
  const double inv_h = 1.0 / spacing;
  ComplexVector out(n);
  for (Index j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (Index k = 1; k <= m; ++k) {
      const Complex right = j + k < n ? v(j + k) : Complex(0.0);
      const Complex left = j - k >= 0 ? v(j - k) : Complex(0.0);
      acc += stencil(k - 1) * (right - left);
    }
    out(j) = acc * inv_h;
  }
  return out;
}

}  // namespace su11kit
