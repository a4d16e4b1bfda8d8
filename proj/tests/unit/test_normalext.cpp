#include "su11kit/normalext.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace su11kit;

namespace {

std::vector<std::uint64_t> seeds() { return {1, 2, 3, 4, 5}; }

void expect_all_pass(const VerificationReport& r) {
  for (const auto& e : r.entries()) EXPECT_TRUE(e.pass) << e.check_id << " " << e.residual;
}

}  // namespace

TEST(AuxiliaryF, Identities) {
  const BargmannSpace aux(0.5, 32, 4);
  const AuxiliaryF f = build_auxiliary_F(aux, 1.5);
  EXPECT_EQ((f.f_adjoint * basis_vector(32, 0)).norm(), 0.0);
  const LadderTriple l = build_ladder_triple(aux);
  EXPECT_LT(((f.f - f.f_adjoint) - (l.lplus + l.lminus)).norm(), 1e-13);
  EXPECT_LT((f.f_adjoint - f.f.adjoint()).norm(), 1e-15);
  // -(lambda - 1) + F + F^* - [F, F^*] = 0 away from the truncation.
  const ComplexMatrix id = ComplexMatrix::Identity(32, 32);
  const ComplexMatrix bracket =
      -0.5 * id + f.f + f.f_adjoint - commutator(f.f, f.f_adjoint);
  EXPECT_LT(interior_residual_norm(bracket, 4), 1e-12);
  EXPECT_THROW(build_auxiliary_F(aux, 2.5), DomainError);
}

TEST(Extension, ConstructionAndRejection) {
  const ExtensionTriplet t = build_normal_extension(BargmannSpace(1.5, 24, 6), ExtensionMode::extend_A);
  EXPECT_DOUBLE_EQ(t.aux_space.lambda(), 0.5);
  EXPECT_EQ((t.phi - basis_vector(24, 0)).norm(), 0.0);
  const ExtensionTriplet adj =
      build_normal_extension(BargmannSpace(0.5, 24, 6), ExtensionMode::extend_A_adjoint);
  EXPECT_DOUBLE_EQ(adj.aux_space.lambda(), 0.5);
  for (ExtensionMode mode : {ExtensionMode::extend_A, ExtensionMode::extend_A_adjoint}) {
    EXPECT_THROW(build_normal_extension(BargmannSpace(1.0, 24, 6), mode), DomainError);
  }
  EXPECT_THROW(build_normal_extension(BargmannSpace(1.5, 65, 8), ExtensionMode::extend_A),
               DomainError);
}

TEST(Extension, ApplyMatchesDenseKronecker) {
  const ExtensionTriplet t = build_normal_extension(BargmannSpace(2.5, 16, 4), ExtensionMode::extend_A);
  const ComplexMatrix dense =
      kronecker(t.z, ComplexMatrix::Identity(16, 16)) + kronecker(t.b, t.f.f);
  EXPECT_LT((t.atilde() - dense).norm(), 1e-13 * dense.norm());
  const ComplexVector psi = random_vector(256, 8);
  EXPECT_LT((t.apply(psi) - dense * psi).norm(), 1e-12 * (dense * psi).norm());
  EXPECT_LT((t.apply_adjoint(psi) - dense.adjoint() * psi).norm(),
            1e-12 * (dense * psi).norm());
}

TEST(Extension, SecondMomentOperatorIsPartialTrace) {
  const ExtensionTriplet t = build_normal_extension(BargmannSpace(1.5, 16, 4), ExtensionMode::extend_A);
  const ComplexMatrix at = t.atilde();
  const ComplexMatrix proj =
      kronecker(ComplexMatrix::Identity(16, 16), t.phi * t.phi.adjoint());
  const ComplexMatrix s = partial_trace_second(proj * at * at.adjoint(), 16, 16);
  EXPECT_LT((second_moment_operator(t) - s).norm(), 1e-12 * s.norm());
}

TEST(Extension, NormalityResidualsVanishForNormalSum) {
  // I (x) I is normal; the residual must be exactly zero on every domain vector.
  const BargmannSpace space(1.5, 16, 4);
  const ExtensionTriplet t = build_normal_extension(space, ExtensionMode::extend_A);
  const KroneckerSum id{{ComplexMatrix::Identity(16, 16), ComplexMatrix::Identity(16, 16)}};
  EXPECT_EQ(normality_residuals(id, t.eplus, 12, 12).maxCoeff(), 0.0);
  const KroneckerSum z_only{{t.z, ComplexMatrix::Identity(16, 16)}};
  EXPECT_GT(normality_residuals(z_only, t.eplus, 12, 12).maxCoeff(), 1e-3);
}

TEST(Extension, VerifyPrimaryModes) {
  const ExtensionTriplet a = build_normal_extension(BargmannSpace(1.5, 48, 12), ExtensionMode::extend_A);
  const VerificationReport r = verify_extension(a, seeds());
  expect_all_pass(r);
  const ReportEntry* n = r.find("extension.normality@lambda=1.5");
  ASSERT_NE(n, nullptr);
  EXPECT_LT(n->residual, 1e-6);
  expect_all_pass(second_moment_check(a, seeds()));

  const ExtensionTriplet b =
      build_normal_extension(BargmannSpace(0.5, 48, 12), ExtensionMode::extend_A_adjoint);
  expect_all_pass(verify_extension(b, seeds()));
  expect_all_pass(second_moment_check(b, seeds()));
}

TEST(Extension, PqRealization) {
  const VerificationReport r = pq_realization_check(FockBasisSpec(96));
  expect_all_pass(r);
  const ReportEntry* match = r.find("extension.pq.candidate_plus_i.match");
  ASSERT_NE(match, nullptr);
  EXPECT_LT(match->residual, 1e-6);
  const ReportEntry* phi = r.find("extension.pq.phi_kernel");
  ASSERT_NE(phi, nullptr);
  EXPECT_LT(phi->residual, 1e-13);
}
