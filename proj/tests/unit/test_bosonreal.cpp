#include "su11kit/bosonreal.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace su11kit;

TEST(Fock, Operators) {
  const FockBasisSpec spec(64);
  const FockOperators f = fock_operators(spec);
  EXPECT_NEAR(f.q(0, 1).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_LT((f.number * basis_vector(64, 3) - 3.0 * basis_vector(64, 3)).norm(), 1e-14);
  EXPECT_LT(interior_residual_norm(commutator(f.q, f.p) - kI * ComplexMatrix::Identity(64, 64), 8),
            1e-12);
  EXPECT_THROW(FockBasisSpec(15), DomainError);
  EXPECT_THROW(FockBasisSpec(33), DomainError);
}

TEST(Parity, BasisMapsAndCasimir) {
  const FockBasisSpec spec(64);
  const ParityRealization even = parity_realization(spec, Parity::even);
  const ParityRealization odd = parity_realization(spec, Parity::odd);
  EXPECT_DOUBLE_EQ(even.space.lambda(), 0.5);
  EXPECT_DOUBLE_EQ(odd.space.lambda(), 1.5);
  EXPECT_EQ(even.space.dim(), 32);
  EXPECT_LT((even.basis_map.col(1) + basis_vector(64, 2)).norm(), 1e-15);
  EXPECT_LT((odd.basis_map.col(1) + basis_vector(64, 3)).norm(), 1e-15);
  for (Index n = 0; n < 32; ++n) {
    const double sign = n % 2 ? -1.0 : 1.0;
    EXPECT_EQ(even.basis_map(2 * n, n), Complex(sign));
    EXPECT_EQ(odd.basis_map(2 * n + 1, n), Complex(sign));
  }
  EXPECT_NEAR(casimir_scalar(even.triple, 4), -0.75, 1e-12);
  EXPECT_NEAR(casimir_scalar(odd.triple, 4), -0.75, 1e-12);
}

TEST(Parity, CompressionMatchesLadderTriple) {
  const FockBasisSpec spec(64);
  const FockOperators f = fock_operators(spec);
  for (Parity parity : {Parity::even, Parity::odd}) {
    const ParityRealization r = parity_realization(spec, parity);
    const ComplexMatrix& m = r.basis_map;
    const ComplexMatrix lplus = m.adjoint() * (-0.5 * f.a.adjoint() * f.a.adjoint()) * m;
    const LadderTriple ref = build_ladder_triple(r.space);
    EXPECT_LT(interior_residual_norm(lplus - ref.lplus, 4), 1e-12);
  }
}

TEST(Squeezed, GridEigenvalues) {
  const PositionGrid grid = PositionGrid::from_points(2048, 12.0);
  const GridOperators ops(grid);
  const ComplexVector vac = squeezed_vacuum(SqueezeParams(1.0, 0.0), grid);
  EXPECT_LT((ops.qinv_p(vac) - kI * vac).norm(), 1e-6);
  const SqueezeParams sp(std::cosh(0.5), std::sinh(0.5));
  EXPECT_LT(std::abs(sp.eigenvalue() - kI * std::exp(1.0)), 1e-14);
  const ComplexVector v = squeezed_vacuum(sp, grid);
  // First-order ODE oracle psi' = -s q psi with s = e.
  const RealVector& q = grid.points();
  ComplexVector oracle(q.size());
  for (Index j = 0; j < q.size(); ++j) oracle(j) = std::exp(-std::exp(1.0) * q(j) * q(j) / 2.0);
  oracle /= oracle.norm();
  EXPECT_LT((v - oracle).norm(), 1e-12);
  EXPECT_LT((ops.qinv_p(v) - sp.eigenvalue() * v).norm() / std::abs(sp.eigenvalue()), 1e-6);
  EXPECT_THROW(SqueezeParams(1.0, 0.5), DomainError);
}

TEST(Squeezed, FockKernel) {
  const SqueezeParams sp(std::cosh(0.5), std::sinh(0.5));
  const FockBasisSpec spec(64);
  const ComplexVector c = squeezed_vacuum(sp, spec);
  EXPECT_NEAR((c(2) / c(0)).real(), -std::tanh(0.5) / std::sqrt(2.0), 1e-14);
  EXPECT_EQ(c(1), Complex(0.0));
  const FockOperators f = fock_operators(spec);
  const ComplexVector k = sp.mu() * (f.a * c) + sp.nu() * (f.a.adjoint() * c);
  EXPECT_LT(k.head(60).norm(), 1e-10);
}

TEST(OddSqueezed, Eigenvalues) {
  const PositionGrid grid = PositionGrid::from_points(2048, 12.0);
  const GridOperators ops(grid);
  const auto [h1, e0] = odd_squeezed_state(0.0, 0.0, grid);
  EXPECT_LT(std::abs(e0 - kI), 1e-15);
  const RealVector& q = grid.points();
  ComplexVector oracle(q.size());
  for (Index j = 0; j < q.size(); ++j) oracle(j) = q(j) * std::exp(-q(j) * q(j) / 2.0);
  oracle /= oracle.norm();
  EXPECT_LT((h1 - oracle).norm(), 1e-12);
  const auto [v, e] = odd_squeezed_state(0.5, 0.1, grid);
  EXPECT_LT(std::abs(e - Complex(1.0, std::exp(0.4))), 1e-14);
  EXPECT_NEAR(v.norm(), 1.0, 1e-10);
  EXPECT_LT((ops.p_qinv(v) - e * v).norm(), 1e-6);
}

TEST(GridOps, Decomposition) {
  // With h = 1/3 the grid point j = M + 1 sits at q = (1 + 1/2) h = 0.5.
  const PositionGrid grid(32, 1.0 / 3.0);
  const Index j = grid.half_count() + 1;
  ASSERT_NEAR(grid.points()(j), 0.5, 1e-15);
  const GridOperators ops(grid);
  const ComplexVector v = random_vector(grid.size(), 21);
  EXPECT_LT(std::abs(ops.qinv_p(v)(j) - 2.0 * ops.p(v)(j)), 1e-13);

  const NonNormalOps dense = ops.dense();
  EXPECT_EQ((dense.x - dense.x.adjoint()).norm(), 0.0);
  const ComplexMatrix recon = dense.x / 2.0 + kI * dense.y / 2.0;
  EXPECT_LT((dense.p_qinv - recon).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Uncertainty, RobertsonAndEigenvector) {
  const PositionGrid grid = PositionGrid::from_points(512, 10.0);
  const GridOperators ops(grid);
  const ComplexVector psi = random_vector(grid.size(), 3).normalized();
  const UncertaintyMoments m = uncertainty_moments(psi, ops);
  EXPECT_GE(m.var_x * m.var_y, m.commutator_sq - 1e-10);

  // Exact eigenvector of the discretized Q^{-1}P: equality holds algebraically.
  const NonNormalOps dense = grid_nonnormal_ops(PositionGrid(64, 0.2));
  Eigen::ComplexEigenSolver<ComplexMatrix> es(dense.qinv_p);
  Index best = 0;
  for (Index i = 1; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i) - kI) < std::abs(es.eigenvalues()(best) - kI)) best = i;
  }
  const ComplexVector v = es.eigenvectors().col(best).normalized();
  const UncertaintyMoments em = uncertainty_moments(v, GridOperators(PositionGrid(64, 0.2)));
  EXPECT_LT(em.eigen_residual, 1e-9);
  EXPECT_LT(std::abs(em.defect), 1e-9 * std::max(1.0, em.var_x * em.var_y));
}

TEST(VerifyBoson, AllPass) {
  const VerificationReport r =
      verify_boson(FockBasisSpec(64), PositionGrid::from_points(2048, 12.0));
  for (const auto& e : r.entries()) EXPECT_TRUE(e.pass) << e.check_id << " " << e.residual;
}
