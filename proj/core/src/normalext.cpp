#include "su11kit/normalext.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace su11kit {

namespace {

using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::string mode_prefix(ExtensionMode mode) {
  return mode == ExtensionMode::extend_A ? "extension." : "extension.adjoint.";
}

ParamMap triplet_params(const ExtensionTriplet& t) {
  return {{"lambda", t.primary_space.lambda()},
          {"aux_lambda", t.aux_space.lambda()},
          {"dim", static_cast<long long>(t.primary_space.dim())},
          {"boundary", static_cast<long long>(t.primary_space.boundary())}};
}

// Commutator [T, T^*] of a Kronecker sum, expanded into Kronecker terms.
KroneckerSum self_commutator(const KroneckerSum& t) {
  KroneckerSum out;
  for (const KroneckerTerm& a : t) {
    for (const KroneckerTerm& b : t) {
      out.push_back({a.left * b.left.adjoint(), a.right * b.right.adjoint()});
      out.push_back({-(b.left.adjoint() * a.left), b.right.adjoint() * a.right});
    }
  }
  return out;
}

// (I (x) phi^*) T (I (x) phi) for phi = aux basis 0.
ComplexMatrix compress_aux_vacuum(const KroneckerSum& t) {
  ComplexMatrix out = ComplexMatrix::Zero(t.front().left.rows(), t.front().left.cols());
  for (const KroneckerTerm& term : t) out += term.left * term.right(0, 0);
  return out;
}

ComplexMatrix interior_density(Index dim, Index interior, std::uint64_t seed) {
  ComplexMatrix rho = random_density(dim, seed);
  rho.bottomRows(dim - interior).setZero();
  rho.rightCols(dim - interior).setZero();
  return rho / rho.trace();
}

double max_over_interior(const RealMatrix& r, Index interior) {
  return r.topLeftCorner(interior, interior).maxCoeff();
}

// Frobenius norm of the interior block of a Kronecker sum.
double interior_kron_norm(const KroneckerSum& t, Index primary_interior,
                          Index aux_interior) {
  const Index n = primary_interior * aux_interior;
  ComplexMatrix dense = ComplexMatrix::Zero(n, n);
  for (const KroneckerTerm& term : t) {
    dense += kronecker(term.left.topLeftCorner(primary_interior, primary_interior),
                       term.right.topLeftCorner(aux_interior, aux_interior));
  }
  return dense.norm();
}

double eplus_condition(const ComplexMatrix& eplus) {
  Eigen::JacobiSVD<ComplexMatrix> svd(eplus);
  const RealVector s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

struct DomainIdentities {
  double commutator_aadag;
  double commutator_ab;
  double sign_violation;
};

// [A, A^*] chi = (lambda - 1) B B^* chi and [A, B] chi = -B^2 chi on
// chi = E+^2 e_m, and the sign of the Gram matrix <chi_m, [A, A^*] chi_n>.
DomainIdentities domain_identities(const BargmannSpace& space,
                                   const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ComplexMatrix& eplus) {
  const Index k = space.interior();
  const double lam = space.lambda();
  const ComplexMatrix chi = (eplus * eplus).leftCols(k);
  const ComplexMatrix comm_aa = commutator(a, a.adjoint()) * chi;
  const ComplexMatrix r1 = comm_aa - (lam - 1.0) * (b * (b.adjoint() * chi));
  const ComplexMatrix r2 = commutator(a, b) * chi + b * (b * chi);
  DomainIdentities out{};
  for (Index m = 0; m < k; ++m) {
    const double scale = chi.col(m).norm();
    out.commutator_aadag = std::max(out.commutator_aadag, r1.col(m).norm() / scale);
    out.commutator_ab = std::max(out.commutator_ab, r2.col(m).norm() / scale);
  }
  ComplexMatrix gram = chi.adjoint() * comm_aa;
  gram = 0.5 * (gram + gram.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  const RealVector ev = solver.eigenvalues();
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  const double sign = lam > 1.0 ? 1.0 : -1.0;
  const double worst = sign > 0 ? ev(0) : -ev(ev.size() - 1);
  out.sign_violation = std::max(0.0, -worst) / norm;
  return out;
}

}  // namespace

AuxiliaryF build_auxiliary_F(const BargmannSpace& aux, double lambda_primary) {
  const double lp = aux.lambda();
  if (std::abs(lp - std::abs(lambda_primary - 1.0)) > 1e-12) {
    throw DomainError("build_auxiliary_F: aux lambda must be |lambda - 1|");
  }
  const LadderTriple l = build_ladder_triple(aux);
  const ComplexMatrix shifted =
      -0.5 * (l.l0 - lp * ComplexMatrix::Identity(aux.dim(), aux.dim()));
  return {shifted + l.lplus, shifted - l.lminus};
}

ComplexMatrix ExtensionTriplet::atilde() const {
  const Index da = aux_space.dim();
  return kronecker(z, ComplexMatrix::Identity(da, da)) + kronecker(b, f.f);
}

ComplexVector ExtensionTriplet::apply(const ComplexVector& psi) const {
  const Index d = primary_space.dim();
  const Index da = aux_space.dim();
  if (psi.size() != d * da) throw DomainError("ExtensionTriplet::apply: size mismatch");
  const Eigen::Map<const RowMajorMatrix> m(psi.data(), d, da);
  const RowMajorMatrix out = z * m + b * m * f.f.transpose();
  return Eigen::Map<const ComplexVector>(out.data(), d * da);
}

ComplexVector ExtensionTriplet::apply_adjoint(const ComplexVector& psi) const {
  const Index d = primary_space.dim();
  const Index da = aux_space.dim();
  if (psi.size() != d * da) {
    throw DomainError("ExtensionTriplet::apply_adjoint: size mismatch");
  }
  const Eigen::Map<const RowMajorMatrix> m(psi.data(), d, da);
  const RowMajorMatrix out = z.adjoint() * m + b.adjoint() * m * f.f.conjugate();
  return Eigen::Map<const ComplexVector>(out.data(), d * da);
}

ExtensionTriplet build_normal_extension(const BargmannSpace& primary,
                                        ExtensionMode mode) {
  const double lam = primary.lambda();
  if (mode == ExtensionMode::extend_A && !(lam > 1.0)) {
    throw DomainError("build_normal_extension: extending A needs lambda > 1");
  }
  if (mode == ExtensionMode::extend_A_adjoint && !(lam > 0.0 && lam < 1.0)) {
    throw DomainError("build_normal_extension: extending A^* needs 0 < lambda < 1");
  }
  const Index d = primary.dim();
  if (d * d > kDefaultKroneckerCap) {
    throw DomainError("build_normal_extension: tensor dimension exceeds 4096");
  }
  const BargmannSpace aux(std::abs(lam - 1.0), d, primary.boundary());
  const SkewTriple e = convert_basis(build_ladder_triple(primary));
  const double cond = eplus_condition(e.eplus);
  if (cond > kEplusConditionCap) {
    throw ToleranceError("build_normal_extension: E+ condition number " +
                         format_number(cond) + " exceeds 1e8");
  }
  const ComplexMatrix a = operator_A(primary);
  ExtensionTriplet t{primary,
                     aux,
                     mode,
                     basis_vector(d, 0),
                     mode == ExtensionMode::extend_A ? a : ComplexMatrix(a.adjoint()),
                     e.eplus.partialPivLu().inverse(),
                     e.eplus,
                     build_auxiliary_F(aux, lam),
                     cond};
  return t;
}

KroneckerSum extension_terms(const ExtensionTriplet& t) {
  const Index da = t.aux_space.dim();
  return {{t.z, ComplexMatrix::Identity(da, da)}, {t.b, t.f.f}};
}

RealMatrix normality_residuals(const KroneckerSum& t, const ComplexMatrix& eplus,
                               Index primary_interior, Index aux_interior) {
  const KroneckerSum comm = self_commutator(t);
  const Index nt = static_cast<Index>(comm.size());
  const Index d = eplus.rows();
  const Index da = t.front().right.rows();
  const ComplexMatrix e2 = eplus * eplus;

  std::vector<ComplexMatrix> v(aux_interior, ComplexMatrix(nt, da));
  for (Index j = 0; j < aux_interior; ++j) {
    for (Index s = 0; s < nt; ++s) v[j].row(s) = comm[s].right.col(j).transpose();
  }
  RealMatrix out(primary_interior, aux_interior);
  ComplexMatrix u(d, nt);
  for (Index m = 0; m < primary_interior; ++m) {
    const ComplexVector chi = e2.col(m);
    for (Index s = 0; s < nt; ++s) u.col(s) = comm[s].left * chi;
    const double scale = chi.norm();
    for (Index j = 0; j < aux_interior; ++j) {
      out(m, j) = (u * v[j]).norm() / scale;
    }
  }
  return out;
}

ComplexMatrix second_moment_operator(const ExtensionTriplet& t) {
  const KroneckerSum terms = extension_terms(t);
  KroneckerSum product;
  for (const KroneckerTerm& a : terms) {
    for (const KroneckerTerm& b : terms) {
      product.push_back({a.left * b.left.adjoint(), a.right * b.right.adjoint()});
    }
  }
  return compress_aux_vacuum(product);
}

VerificationReport verify_extension(const ExtensionTriplet& t,
                                    const std::vector<std::uint64_t>& seeds,
                                    double tol_scale) {
  VerificationReport report;
  const std::string pre = mode_prefix(t.mode);
  const double lam = t.primary_space.lambda();
  const std::string tag = lambda_tag(lam);
  const ParamMap tp = triplet_params(t);
  const Index d = t.primary_space.dim();
  const Index da = t.aux_space.dim();
  const Index k = t.primary_space.interior();
  const Index ka = t.aux_space.interior();

  report.add(pre + "eplus_condition" + tag, tp, t.eplus_condition, kEplusConditionCap,
             "condition number of the truncated E+");

  {
    const double lp = t.aux_space.lambda();
    const SkewTriple e = convert_basis(build_ladder_triple(t.aux_space));
    const ComplexMatrix& f = t.f.f;
    const ComplexMatrix& fa = t.f.f_adjoint;
    const ComplexMatrix id = ComplexMatrix::Identity(da, da);
    report.add(pre + "aux.adjoint_form" + tag, tp,
               (ComplexMatrix(f.adjoint()) - fa).cwiseAbs().maxCoeff(),
               1e-12 * tol_scale, "F'^* = -(1/2)(L0' - lambda') - L-'");
    report.add(pre + "aux.e0_form" + tag, tp, (f - fa - e.e0).cwiseAbs().maxCoeff(),
               1e-12 * tol_scale, "F' - F'^* = E0'");
    report.add(pre + "aux.eplus_form" + tag, tp,
               ((-0.5 * kI) * (fa + f - lp * id) - e.eplus).cwiseAbs().maxCoeff(),
               1e-12 * tol_scale, "(-i/2)(F'^* + F' - lambda') = E+'");
    const ComplexMatrix bracket = -lp * id + f + fa - commutator(f, fa);
    report.add(pre + "aux.normality_bracket" + tag, tp,
               bracket.topLeftCorner(ka, ka).cwiseAbs().maxCoeff(), 1e-10 * tol_scale,
               "-lambda' + F' + F'^* - [F', F'^*] = 0 on the aux interior");
    report.add(pre + "aux.phi_kernel" + tag, tp, (fa * t.phi).norm(),
               1e-13 * tol_scale, "F'^* phi = 0");
  }

  {
    const KroneckerSum terms = extension_terms(t);
    const Index b0 = std::max<Index>(1, d / 8);
    const RealMatrix r = normality_residuals(terms, t.eplus, d - b0, da - b0);
    report.add(pre + "normality" + tag, tp, max_over_interior(r, std::min(k, ka)),
               1e-6 * tol_scale,
               "max ||[At, At^*] chi|| / ||chi||, chi = (E+^2 (x) I)(e_m (x) e_j)");

    const Index margins[] = {d / 8, d / 6, d / 4, d / 3};
    std::string values;
    double worst_ratio = 0.0;
    double previous = 0.0;
    for (std::size_t i = 0; i < std::size(margins); ++i) {
      const double v = max_over_interior(r, d - std::max<Index>(1, margins[i]));
      if (i > 0) worst_ratio = std::max(worst_ratio, v / previous);
      previous = v;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%sb=%ld:%.3g", i ? " " : "",
                    static_cast<long>(margins[i]), v);
      values += buf;
    }
    report.add(pre + "normality.boundary_monotone" + tag, tp,
               std::max(0.0, worst_ratio - 1.0), 0.0,
               "largest relative increase over boundaries " + values);
  }

  {
    const ComplexMatrix a = operator_A(t.primary_space);
    const DomainIdentities di = domain_identities(t.primary_space, a, t.b, t.eplus);
    report.add(pre + "domain.commutator_a_adjoint" + tag, tp, di.commutator_aadag,
               1e-6 * tol_scale, "[A, A^*] chi = (lambda - 1) B B^* chi");
    report.add(pre + "domain.commutator_a_b" + tag, tp, di.commutator_ab,
               1e-6 * tol_scale, "[A, B] chi = -B^2 chi");
    report.add(pre + "domain.commutator_sign" + tag, tp, di.sign_violation,
               1e-6 * tol_scale,
               lam > 1.0 ? "[A, A^*] >= 0 on the domain vectors"
                         : "[A, A^*] <= 0 on the domain vectors");
  }

  {
    const KroneckerSum terms = extension_terms(t);
    const ComplexMatrix first = compress_aux_vacuum(terms);
    const ComplexMatrix second = second_moment_operator(t);
    const ComplexMatrix zz = t.z * t.z.adjoint();
    const Complex phi_f = t.phi.dot(t.f.f * t.phi);
    const Complex phi_fa = t.phi.dot(t.f.f_adjoint * t.phi);
    const Complex phi_ffa = t.phi.dot(t.f.f * (t.f.f_adjoint * t.phi));
    double dev_first = 0.0;
    double dev_second = 0.0;
    double form_first = 0.0;
    double form_second = 0.0;
    for (const std::uint64_t seed : seeds) {
      const ComplexMatrix rho = interior_density(d, k, seed);
      dev_first = std::max(dev_first, std::abs((first * rho).trace() - (t.z * rho).trace()));
      dev_second = std::max(dev_second, std::abs((second * rho).trace() - (zz * rho).trace()));
      form_first = std::max(form_first, std::abs(phi_f * (t.b * rho).trace()));
      form_second = std::max(
          form_second,
          std::abs(phi_fa * (t.z.adjoint() * t.b * rho).trace() -
                   phi_f * (t.b * t.z * rho).trace() -
                   phi_ffa * (t.b * t.b * rho).trace()));
    }
    ParamMap sp = tp;
    sp["seeds"] = static_cast<long long>(seeds.size());
    const std::string zname = t.mode == ExtensionMode::extend_A ? "A" : "A^*";
    report.add(pre + "moment.first" + tag, sp, dev_first, 1e-8 * tol_scale,
               "tr At (rho (x) phi phi^*) = tr " + zname + " rho");
    report.add(pre + "moment.second" + tag, sp, dev_second, 1e-6 * tol_scale,
               t.mode == ExtensionMode::extend_A
                   ? "tr At At^* (rho (x) phi phi^*) = tr A A^* rho, interior rho"
                   : "tr At At^* (rho (x) phi phi^*) = tr A^* A rho, interior rho");
    report.add(pre + "kernel_forms.first" + tag, sp, form_first, 1e-12 * tol_scale,
               "<phi, F' phi> tr B rho = 0");
    report.add(pre + "kernel_forms.second" + tag, sp, form_second, 1e-12 * tol_scale,
               "<phi,F'^*phi> tr Z^*B rho - <phi,F'phi> tr BZ rho - "
               "<phi,F'F'^*phi> tr B^2 rho = 0");
  }
  return report;
}

VerificationReport second_moment_check(const ExtensionTriplet& t,
                                       const std::vector<std::uint64_t>& seeds,
                                       double tol_scale) {
  VerificationReport report;
  const std::string pre = mode_prefix(t.mode) + "second_moment.";
  const std::string tag = lambda_tag(t.primary_space.lambda());
  const ParamMap tp = triplet_params(t);
  const Index d = t.primary_space.dim();
  const Index k = t.primary_space.interior();

  const ComplexMatrix s = second_moment_operator(t);
  const ComplexMatrix zz = t.z * t.z.adjoint();
  const ComplexMatrix diff = (s - zz).topLeftCorner(k, k);
  const ComplexMatrix herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  report.add(pre + "floor" + tag, tp, std::max(0.0, -solver.eigenvalues()(0)),
             1e-6 * tol_scale, "lowest eigenvalue of S - Z Z^* on the interior");
  report.add(pre + "equality" + tag, tp, diff.norm(), 1e-6 * tol_scale,
             "||S - Z Z^*|| on the interior");
  double worst = 0.0;
  for (const std::uint64_t seed : seeds) {
    const ComplexMatrix rho = interior_density(d, k, seed);
    worst = std::max(worst, std::abs((s * rho).trace() - (zz * rho).trace()));
  }
  ParamMap sp = tp;
  sp["seeds"] = static_cast<long long>(seeds.size());
  report.add(pre + "trace" + tag, sp, worst, 1e-7 * tol_scale,
             "tr rho S = tr rho Z Z^*");
  return report;
}

VerificationReport pq_realization_check(const FockBasisSpec& fock,
                                        double tol_scale) {
  VerificationReport report;
  const Index d = fock.dim();
  const Index half = d / 2;
  const FockOperators ops = fock_operators(fock);
  const ParityRealization odd = parity_realization(fock, Parity::odd);
  const ParityRealization even = parity_realization(fock, Parity::even);
  const ComplexMatrix& mo = odd.basis_map;
  const ComplexMatrix& me = even.basis_map;

  const BargmannSpace primary(1.5, half, half / 4);
  const ExtensionTriplet t = build_normal_extension(primary, ExtensionMode::extend_A);
  const Index k = primary.interior();
  ParamMap pp{{"fock_dim", static_cast<long long>(d)},
              {"dim", static_cast<long long>(half)},
              {"boundary", static_cast<long long>(primary.boundary())}};

  // PQ^{-1} and Q^{-2} restricted to the odd sector, n' + a'^{*2} to the even.
  const ComplexMatrix q_oe = mo.adjoint() * ops.q * me;
  const ComplexMatrix p_oe = mo.adjoint() * ops.p * me;
  const ComplexMatrix pq_inv = q_oe.transpose().partialPivLu()
                                   .solve(ComplexMatrix(p_oe.transpose()))
                                   .transpose();
  // Q^2 = (a^2 + a^{*2} + 2n + 1)/2 term by term; squaring the truncated Q
  // would lose a^* a^* at the top Fock state and shift the corner entry.
  const ComplexMatrix adag = ops.a.adjoint();
  const ComplexMatrix q2_fock =
      0.5 * (ops.a * ops.a + adag * adag + 2.0 * ops.number +
             ComplexMatrix::Identity(d, d));
  const ComplexMatrix q2_inv =
      ComplexMatrix(mo.adjoint() * q2_fock * mo).partialPivLu().inverse();
  const ComplexMatrix g = me.adjoint() * (ops.number + adag * adag) * me;

  const ComplexVector vac = basis_vector(d, 0);
  report.add("extension.pq.phi_kernel", pp,
             (-0.5 * (ops.number + ops.a * ops.a) * vac).norm(), 1e-13 * tol_scale,
             "F'^* = -(1/2)(n' + a'^2) annihilates the Fock vacuum");
  report.add("extension.pq.operator_A", pp,
             interior_residual_norm(pq_inv - t.z, primary.boundary()),
             1e-6 * tol_scale, "PQ^{-1} on the odd sector = A at lambda = 3/2");
  report.add("extension.pq.eplus_inverse", pp,
             interior_residual_norm(-2.0 * kI * q2_inv - t.b, primary.boundary()),
             1e-6 * tol_scale, "E+^{-1} = -2i Q^{-2} on the odd sector");

  const KroneckerSum abstract = extension_terms(t);
  const ComplexMatrix id = ComplexMatrix::Identity(half, half);
  struct Candidate {
    const char* name;
    Complex c;
  };
  for (const Candidate& cand : {Candidate{"plus_i", kI}, Candidate{"minus_i_quarter", -0.25 * kI}}) {
    const KroneckerSum concrete = {{pq_inv, id}, {q2_inv, cand.c * g}};
    const std::string pre = std::string("extension.pq.candidate_") + cand.name + ".";
    KroneckerSum diff = concrete;
    for (const KroneckerTerm& term : abstract) diff.push_back({-term.left, term.right});
    const double mismatch = interior_kron_norm(diff, k, k);
    const double normality =
        max_over_interior(normality_residuals(concrete, t.eplus, k, k), k);

    const ComplexMatrix first = compress_aux_vacuum(concrete);
    double moment = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const ComplexMatrix rho = interior_density(half, k, seed);
      moment = std::max(moment, std::abs((first * rho).trace() - (t.z * rho).trace()));
    }
    char note[200];
    if (cand.c == kI) {
      report.add(pre + "match", pp, mismatch, 1e-6 * tol_scale,
                 "candidate equals the abstract extension");
      report.add(pre + "normality", pp, normality, 1e-6 * tol_scale,
                 "domain-vector normality of the candidate");
    } else {
      // The candidate differs from the abstract extension by (c - i) Q^{-2} (x) G
      // = -(5/4) B (x) F'.
      KroneckerSum predicted = diff;
      predicted.push_back({1.25 * t.b, t.f.f});
      std::snprintf(note, sizeof note,
                    "deviates from the abstract extension by %.3g, as predicted "
                    "by -(5/4) B (x) F'; normality defect %.3g",
                    mismatch, normality);
      report.add(pre + "discrepancy", pp, interior_kron_norm(predicted, k, k),
                 1e-6 * tol_scale, note);
    }
    std::snprintf(note, sizeof note,
                  "tr At (rho (x) phi phi^*) = tr A rho holds for any c since "
                  "<phi, F' phi> = 0");
    report.add(pre + "moment.first", pp, moment, 1e-8 * tol_scale, note);
  }
  return report;
}

}  // namespace su11kit
