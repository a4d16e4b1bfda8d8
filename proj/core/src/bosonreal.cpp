#include "su11kit/bosonreal.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace su11kit {

namespace {

constexpr double kPi = std::numbers::pi;

ParamMap fock_params(const FockBasisSpec& spec) {
  return {{"dim", static_cast<long long>(spec.dim())}};
}

ParamMap grid_params(const PositionGrid& grid) {
  return {{"grid_points", static_cast<long long>(grid.size())},
          {"spacing", grid.spacing()},
          {"extent", grid.extent()}};
}

double outside_mass_gaussian(double a, double extent) {
  // Fraction of exp(-a q^2) beyond |q| > extent.
  return std::erfc(std::sqrt(a) * extent);
}

double outside_mass_first_hermite(double a, double extent) {
  // Fraction of q^2 exp(-a q^2) beyond |q| > extent.
  const double x = std::sqrt(a) * extent;
  return std::erfc(x) + 2.0 * x * std::exp(-x * x) / std::sqrt(kPi);
}

std::string squeeze_label(double r, double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "r=%g,theta=%g", r, theta);
  return buf;
}

}  // namespace

FockBasisSpec::FockBasisSpec(Index dim) : dim_(dim) {
  if (dim < 16 || dim % 2 != 0) {
    throw DomainError("FockBasisSpec: dim must be even and >= 16");
  }
}

FockOperators fock_operators(const FockBasisSpec& spec) {
  const Index d = spec.dim();
  FockOperators ops;
  ops.a = ComplexMatrix::Zero(d, d);
  for (Index n = 1; n < d; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const ComplexMatrix ad = ops.a.adjoint();
  ops.number = ad * ops.a;
  ops.q = (ops.a + ad) / std::sqrt(2.0);
  ops.p = (ops.a - ad) / (kI * std::sqrt(2.0));
  return ops;
}

ParityRealization parity_realization(const FockBasisSpec& spec, Parity parity) {
  const Index d = spec.dim();
  const Index half = d / 2;
  const Index offset = parity == Parity::even ? 0 : 1;
  const FockOperators f = fock_operators(spec);
  ComplexMatrix v = ComplexMatrix::Zero(d, half);
  for (Index n = 0; n < half; ++n) v(2 * n + offset, n) = n % 2 == 0 ? 1.0 : -1.0;

  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix adag = f.a.adjoint();
  LadderTriple t;
  t.l0 = v.adjoint() * (f.number + 0.5 * id) * v;
  t.lplus = v.adjoint() * (-0.5 * adag * adag) * v;
  t.lminus = v.adjoint() * (0.5 * f.a * f.a) * v;

  const double lambda = parity == Parity::even ? 0.5 : 1.5;
  BargmannSpace space(lambda, half);
  const LadderTriple ref = build_ladder_triple(space);
  const double mismatch = std::max({(t.l0 - ref.l0).cwiseAbs().maxCoeff(),
                                    (t.lplus - ref.lplus).cwiseAbs().maxCoeff(),
                                    (t.lminus - ref.lminus).cwiseAbs().maxCoeff()});
  if (mismatch > 1e-12) {
    throw ToleranceError("parity_realization: compressed triple does not match "
                         "the abstract ladder triple");
  }
  return {space, t, v};
}

PositionGrid::PositionGrid(Index half_count, double spacing)
    : half_count_(half_count), spacing_(spacing) {
  if (half_count < 8 || !(spacing > 0.0) || !std::isfinite(spacing)) {
    throw DomainError("PositionGrid: need M >= 8 and h > 0");
  }
  if (spacing * static_cast<double>(half_count) < 8.0) {
    throw DomainError("PositionGrid: extent M h must be at least 8");
  }
  points_.resize(2 * half_count);
  for (Index j = 0; j < 2 * half_count; ++j) {
    points_(j) = (static_cast<double>(j - half_count) + 0.5) * spacing;
  }
}

PositionGrid PositionGrid::from_points(Index count, double extent) {
  if (count < 16 || count % 2 != 0) {
    throw DomainError("PositionGrid: point count must be even and >= 16");
  }
  const Index m = count / 2;
  return PositionGrid(m, extent / static_cast<double>(m));
}

SqueezeParams::SqueezeParams(Complex mu, Complex nu) : mu_(mu), nu_(nu) {
  if (std::abs(std::norm(mu) - std::norm(nu) - 1.0) > 1e-12) {
    throw DomainError("SqueezeParams: |mu|^2 - |nu|^2 must equal 1");
  }
  if (!(std::abs(nu / mu) < 1.0)) {
    throw DomainError("SqueezeParams: |nu/mu| must be below 1");
  }
}

ComplexVector squeezed_vacuum(const SqueezeParams& params,
                              const PositionGrid& grid) {
  const Complex s = params.width();
  if (outside_mass_gaussian(s.real(), grid.extent()) > 1e-12) {
    throw DomainError("squeezed_vacuum: Gaussian not contained in the grid");
  }
  const RealVector& q = grid.points();
  ComplexVector psi(q.size());
  for (Index j = 0; j < q.size(); ++j) psi(j) = std::exp(-0.5 * s * q(j) * q(j));
  psi.normalize();
  return psi;
}

ComplexVector squeezed_vacuum(const SqueezeParams& params,
                              const FockBasisSpec& spec) {
  const Complex ratio = params.nu() / params.mu();
  const Index d = spec.dim();
  ComplexVector c = ComplexVector::Zero(d);
  c(0) = std::pow(1.0 - std::norm(ratio), 0.25);
  for (Index n = 2; n < d; n += 2) {
    const double nn = static_cast<double>(n);
    c(n) = -ratio * std::sqrt((nn - 1.0) / nn) * c(n - 2);
  }
  if (1.0 - c.squaredNorm() > 1e-10) {
    throw DomainError("squeezed_vacuum: coefficient tail beyond the truncation "
                      "exceeds 1e-10");
  }
  return c;
}

std::pair<ComplexVector, Complex> odd_squeezed_state(double p, double tq,
                                                     const PositionGrid& grid) {
  const double stretch = std::exp(4.0 * tq);
  if (outside_mass_first_hermite(stretch, grid.extent()) > 1e-12) {
    throw DomainError("odd_squeezed_state: dilated state not contained in the grid");
  }
  const Complex sigma(stretch, -2.0 * p);
  // exp(i tq (PQ + QP)) f(q) = e^{tq} f(e^{2 tq} q) and the first Hermite
  // function is sqrt(2) pi^{-1/4} q e^{-q^2/2}.
  const double amplitude =
      std::sqrt(2.0) * std::pow(kPi, -0.25) * std::exp(3.0 * tq);
  const RealVector& q = grid.points();
  const double root_h = std::sqrt(grid.spacing());
  ComplexVector psi(q.size());
  for (Index j = 0; j < q.size(); ++j) {
    psi(j) = root_h * amplitude * q(j) * std::exp(-0.5 * sigma * q(j) * q(j));
  }
  return {psi, Complex(2.0 * p, stretch)};
}

GridOperators::GridOperators(const PositionGrid& grid, DerivativeScheme scheme,
                             int order)
    : grid_(grid), scheme_(scheme) {
  if (scheme == DerivativeScheme::central) {
    stencil_ = central_difference_stencil(order);
    return;
  }
  const Index n = grid.size();
  const double length = grid.spacing() * static_cast<double>(n);
  spectral_ = RealMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      if (j == k) continue;
      const Index diff = j - k;
      const double sign = diff % 2 == 0 ? 1.0 : -1.0;
      spectral_(j, k) = (kPi / length) * sign /
                        std::tan(kPi * static_cast<double>(diff) /
                                 static_cast<double>(n));
    }
  }
}

ComplexVector GridOperators::derivative(const ComplexVector& v) const {
  const Index n = grid_.size();
  if (v.size() != n) throw DomainError("GridOperators: vector size mismatch");
  if (scheme_ == DerivativeScheme::spectral) {
    const RealVector re = spectral_ * v.real();
    const RealVector im = spectral_ * v.imag();
    ComplexVector out(n);
    for (Index j = 0; j < n; ++j) out(j) = Complex(re(j), im(j));
    return out;
  }
  return central_difference(v, stencil_, grid_.spacing());
}

ComplexVector GridOperators::p(const ComplexVector& v) const {
  return -kI * derivative(v);
}

ComplexVector GridOperators::qinv_p(const ComplexVector& v) const {
  return p(v).cwiseQuotient(grid_.points().cast<Complex>());
}

ComplexVector GridOperators::p_qinv(const ComplexVector& v) const {
  return p(v.cwiseQuotient(grid_.points().cast<Complex>()));
}

ComplexVector GridOperators::x(const ComplexVector& v) const {
  return qinv_p(v) + p_qinv(v);
}

ComplexVector GridOperators::y(const ComplexVector& v) const {
  return kI * (qinv_p(v) - p_qinv(v));
}

NonNormalOps GridOperators::dense() const {
  const Index n = grid_.size();
  ComplexMatrix pm(n, n);
  for (Index k = 0; k < n; ++k) pm.col(k) = p(basis_vector(n, k));
  const ComplexVector qinv = grid_.points().cwiseInverse().cast<Complex>();
  NonNormalOps ops;
  ops.qinv_p = qinv.asDiagonal() * pm;
  ops.p_qinv = pm * qinv.asDiagonal();
  ops.x = ops.qinv_p + ops.p_qinv;
  ops.y = kI * (ops.qinv_p - ops.p_qinv);
  return ops;
}

NonNormalOps grid_nonnormal_ops(const PositionGrid& grid,
                                DerivativeScheme scheme, int order) {
  return GridOperators(grid, scheme, order).dense();
}

UncertaintyMoments uncertainty_moments(const ComplexVector& psi,
                                       const GridOperators& ops) {
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    throw DomainError("uncertainty_moments: state must be normalized");
  }
  UncertaintyMoments m;
  const ComplexVector t_psi = ops.qinv_p(psi);
  m.eigenvalue = psi.dot(t_psi);
  m.eigen_residual = (t_psi - m.eigenvalue * psi).norm();

  const ComplexVector x_psi = ops.x(psi);
  const ComplexVector y_psi = ops.y(psi);
  const ComplexVector u = x_psi - psi.dot(x_psi).real() * psi;
  const ComplexVector w = y_psi - psi.dot(y_psi).real() * psi;
  m.var_x = u.squaredNorm();
  m.var_y = w.squaredNorm();
  const Complex uw = u.dot(w);
  m.commutator_sq = uw.imag() * uw.imag();
  // |u|^2 |w|^2 - Im<u,w>^2 = |w|^2 |u_perp|^2 + Re<u,w>^2, which keeps the
  // small difference free of cancellation.
  const ComplexVector u_perp = u - (w.dot(u) / m.var_y) * w;
  m.defect = m.var_y * u_perp.squaredNorm() + uw.real() * uw.real();

  const double dy = std::sqrt(m.var_y);
  const double e = m.eigen_residual;
  const double lower = std::max(0.0, m.var_y - 2.0 * e * dy);
  m.defect_bound = m.var_y * (dy + 2.0 * e) * (dy + 2.0 * e) - lower * lower;
  return m;
}

VerificationReport eigen_and_uncertainty_check(const ComplexVector& psi,
                                               const GridOperators& ops,
                                               const std::string& label,
                                               double eigen_tol,
                                               double tol_scale) {
  const UncertaintyMoments m = uncertainty_moments(psi, ops);
  const ParamMap params = grid_params(ops.grid());
  const double scale = std::max(1.0, m.var_x * m.var_y);
  VerificationReport report;
  report.add(label + ".eigen_residual", params, m.eigen_residual,
             eigen_tol * tol_scale,
             "||Q^{-1}P psi - z psi|| with z = <psi, Q^{-1}P psi> = " +
                 format_number(m.eigenvalue.real()) + " + " +
                 format_number(m.eigenvalue.imag()) + "i");
  report.add(label + ".uncertainty_bound", params,
             std::max(0.0, m.defect - m.defect_bound) / scale,
             1e-12 * tol_scale,
             "dX^2 dY^2 - |<[X,Y]>|^2/4 = " + format_number(m.defect) +
                 " is at most " + format_number(m.defect_bound) +
                 " (8 e dY^3 for dY >= 2e, e the eigen-residual)");
  report.add(label + ".robertson", params,
             std::max(0.0, -m.defect) / scale, 1e-12 * tol_scale,
             "dX^2 dY^2 >= |<[X,Y]>|^2/4");
  return report;
}

VerificationReport verify_boson(const FockBasisSpec& spec,
                                const PositionGrid& grid, double tol_scale) {
  VerificationReport report;
  const Index d = spec.dim();
  const Index b = default_boundary(d);
  ParamMap fp = fock_params(spec);
  fp["boundary"] = static_cast<long long>(b);
  const FockOperators f = fock_operators(spec);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  report.add("boson.fock.canonical_commutator", fp,
             interior_residual_norm(commutator(f.q, f.p) - kI * id, b),
             1e-12 * tol_scale, "[Q, P] = i");
  report.add("boson.fock.number_operator", fp,
             interior_residual_norm(
                 f.number - 0.5 * (f.q * f.q + f.p * f.p - id), b),
             1e-12 * tol_scale,
             "n_b = a_b^* a_b = (Q^2 + P^2 - 1)/2; the product a_b a_b^* equals "
             "n_b + 1, so the number operator is taken as a_b^* a_b");

  const ParityRealization even = parity_realization(spec, Parity::even);
  const ParityRealization odd = parity_realization(spec, Parity::odd);
  for (const auto* r : {&even, &odd}) {
    const bool is_even = r == &even;
    const std::string name = is_even ? "even" : "odd";
    ParamMap pp = fp;
    pp["lambda"] = r->space.lambda();
    const LadderTriple ref = build_ladder_triple(r->space);
    report.add("boson.parity." + name + ".ladder_match", pp,
               std::max({(r->triple.l0 - ref.l0).cwiseAbs().maxCoeff(),
                         (r->triple.lplus - ref.lplus).cwiseAbs().maxCoeff(),
                         (r->triple.lminus - ref.lminus).cwiseAbs().maxCoeff()}),
               1e-12 * tol_scale,
               "compressed (n_b + 1/2, -(1/2)a_b^{*2}, (1/2)a_b^2) equals the "
               "lambda = " + format_number(r->space.lambda()) + " ladder triple");
    report.add("boson.parity." + name + ".casimir", pp,
               std::abs(casimir_scalar(r->triple, r->space.boundary()) + 0.75),
               1e-12 * tol_scale, "Casimir = -3/4");

    // Number states of the realization, generated by L+ in Fock space.
    const ComplexMatrix lplus_fock = -0.5 * f.a.adjoint() * f.a.adjoint();
    ComplexVector v = basis_vector(d, is_even ? 0 : 1);
    double worst = (v - r->basis_map.col(0)).cwiseAbs().maxCoeff();
    const double lam = r->space.lambda();
    for (Index n = 0; n + 1 < d / 2; ++n) {
      const double nn = static_cast<double>(n);
      v = lplus_fock * v / std::sqrt((nn + 1.0) * (lam + nn));
      worst = std::max(worst, (v - r->basis_map.col(n + 1)).cwiseAbs().maxCoeff());
    }
    report.add("boson.parity." + name + ".number_states", pp, worst,
               1e-12 * tol_scale,
               is_even ? "|n>_N = (-1)^n |2n>" : "|n>_N = (-1)^n |2n+1>");
  }

  {
    const Index half = d / 2;
    const Index hb = default_boundary(half);
    const ComplexMatrix q_eo = odd.basis_map.adjoint() * f.q * even.basis_map;
    const ComplexMatrix p_eo = odd.basis_map.adjoint() * f.p * even.basis_map;
    const ComplexMatrix a_even = operator_A(even.space);
    const ComplexMatrix a_odd = operator_A(odd.space);
    ParamMap pp = fp;
    pp["boundary"] = static_cast<long long>(hb);
    report.add("boson.operator_A.even", pp,
               interior_residual_norm(q_eo * a_even - p_eo, hb),
               1e-5 * tol_scale,
               "A = Q^{-1}P on the even sector, checked as Q A = P");
    report.add("boson.operator_A.odd", pp,
               interior_residual_norm(a_odd * q_eo - p_eo, hb),
               1e-5 * tol_scale,
               "A = PQ^{-1} on the odd sector, checked as A Q = P on even input");
  }

  {
    const SqueezeParams sp(std::cosh(0.5), std::sinh(0.5));
    const ComplexVector c = squeezed_vacuum(sp, spec);
    const Complex mu = sp.mu();
    const Complex nu = sp.nu();
    const ComplexVector kernel = (mu * f.a + nu * f.a.adjoint()) * c;
    report.add("boson.squeezed.fock_kernel", fp,
               kernel.head(d - b).norm(), 1e-12 * tol_scale,
               "(mu a_b + nu a_b^*)|0; mu, nu> = 0, mu = cosh 0.5, nu = sinh 0.5");
  }

  const GridOperators ops(grid);
  const GridOperators spectral(grid, DerivativeScheme::spectral);
  {
    double worst_eig = 0.0;
    double worst_eig_spectral = 0.0;
    double worst_res = 0.0;
    double worst_bound = 0.0;
    std::string worst_label;
    const double rs[] = {0.0, 0.3, 0.5, std::atanh(0.6)};
    for (const double r : rs) {
      for (int k = 0; k < 8; ++k) {
        const double theta = 0.25 * kPi * k;
        if (r == 0.0 && k > 0) break;
        const SqueezeParams sp(std::cosh(r), std::polar(std::sinh(r), theta));
        const ComplexVector psi = squeezed_vacuum(sp, grid);
        const Complex expected = sp.eigenvalue();
        const UncertaintyMoments m = uncertainty_moments(psi, ops);
        const double rel = std::abs(m.eigenvalue - expected) / std::abs(expected);
        if (rel > worst_eig) {
          worst_eig = rel;
          worst_label = squeeze_label(r, theta);
        }
        worst_res = std::max(worst_res, m.eigen_residual);
        worst_bound = std::max(
            worst_bound, std::max(0.0, m.defect - m.defect_bound) /
                             std::max(1.0, m.var_x * m.var_y));
        const Complex z_spec = psi.dot(spectral.qinv_p(psi));
        worst_eig_spectral = std::max(
            worst_eig_spectral, std::abs(z_spec - expected) / std::abs(expected));
      }
    }
    ParamMap gp = grid_params(grid);
    gp["max_abs_nu_over_mu"] = 0.6;
    report.add("boson.squeezed.eigenvalue", gp, worst_eig, 1e-6 * tol_scale,
               "<Q^{-1}P> on exp(-s q^2/2) equals i(mu+nu)/(mu-nu), relative; "
               "worst at " + worst_label);
    report.add("boson.squeezed.eigenvalue_spectral", gp, worst_eig_spectral,
               1e-6 * tol_scale,
               "same with Fourier differentiation for P");
    report.add("boson.squeezed.eigen_residual", gp, worst_res, 1e-6 * tol_scale,
               "||Q^{-1}P psi - z psi||");
    report.add("boson.squeezed.uncertainty_bound", gp, worst_bound,
               1e-12 * tol_scale,
               "uncertainty defect within 8 e dY^3 of equality");
  }

  {
    const PositionGrid vacuum_grid(600, 0.02);
    report.append(eigen_and_uncertainty_check(
        squeezed_vacuum(SqueezeParams(1.0, 0.0), vacuum_grid),
        GridOperators(vacuum_grid), "boson.vacuum", 1e-6, tol_scale));
  }

  {
    double worst_eig = 0.0;
    double worst_res = 0.0;
    double worst_norm = 0.0;
    for (int pi = -4; pi <= 4; ++pi) {
      for (int ti = -3; ti <= 3; ++ti) {
        const double p = 0.25 * pi;
        const double tq = 0.1 * ti;
        const auto [psi, expected] = odd_squeezed_state(p, tq, grid);
        const ComplexVector image = ops.p_qinv(psi);
        const Complex z = psi.dot(image) / psi.squaredNorm();
        worst_eig = std::max(worst_eig, std::abs(z - expected));
        worst_res = std::max(worst_res, (image - expected * psi).norm());
        worst_norm = std::max(worst_norm, std::abs(psi.norm() - 1.0));
      }
    }
    ParamMap gp = grid_params(grid);
    gp["p_max"] = 1.0;
    gp["tq_max"] = 0.3;
    report.add("boson.odd_squeezed.eigenvalue", gp, worst_eig, 1e-6 * tol_scale,
               "<PQ^{-1}> on the odd squeezed state equals 2p + e^{4 tq} i");
    report.add("boson.odd_squeezed.eigen_residual", gp, worst_res,
               1e-6 * tol_scale, "||PQ^{-1} psi - (2p + e^{4 tq} i) psi||");
    report.add("boson.odd_squeezed.unit_norm", gp, worst_norm, 1e-10 * tol_scale,
               "chirp and dilation preserve the norm");
  }

  {
    // Exact eigenvector of the discretized Q^{-1}P on a small grid: the
    // uncertainty equality then holds to rounding.
    const PositionGrid small(64, 0.125);
    const GridOperators small_ops(small);
    const NonNormalOps dense = small_ops.dense();
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(dense.qinv_p);
    Index best = 0;
    for (Index k = 1; k < solver.eigenvalues().size(); ++k) {
      if (std::abs(solver.eigenvalues()(k) - kI) <
          std::abs(solver.eigenvalues()(best) - kI)) {
        best = k;
      }
    }
    const ComplexVector psi = solver.eigenvectors().col(best).normalized();
    const UncertaintyMoments m = uncertainty_moments(psi, small_ops);
    ParamMap gp = grid_params(small);
    report.add("boson.uncertainty.discrete_eigenvector", gp,
               m.defect / (m.var_x * m.var_y), 1e-9 * tol_scale,
               "equality dX^2 dY^2 = |<[X,Y]>|^2/4 for an eigenvector of the "
               "discretized Q^{-1}P, relative");
    const double entry_scale = dense.p_qinv.cwiseAbs().maxCoeff();
    report.add("boson.grid.decomposition", gp,
               std::max((dense.p_qinv - (0.5 * dense.x + 0.5 * kI * dense.y))
                            .cwiseAbs()
                            .maxCoeff(),
                        (dense.x - dense.x.adjoint()).cwiseAbs().maxCoeff()) /
                   entry_scale,
               1e-14 * tol_scale,
               "PQ^{-1} = X/2 + iY/2 with X Hermitian, relative to the largest entry");
  }
  return report;
}

}  // namespace su11kit
