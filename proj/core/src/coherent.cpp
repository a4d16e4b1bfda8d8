#include "su11kit/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "su11kit/quadrature.hpp"

namespace su11kit {

namespace {

constexpr double kTailLimit = 1e-10;
constexpr double kPi = std::numbers::pi;

// sqrt(Gamma(lambda+n) / (n! Gamma(lambda))) for n = 0..count-1.
RealVector pochhammer_roots(double lambda, Index count) {
  RealVector g(count);
  for (Index n = 0; n < count; ++n) {
    const double nn = static_cast<double>(n);
    g(n) = std::exp(0.5 * (std::lgamma(lambda + nn) - std::lgamma(nn + 1.0) -
                           std::lgamma(lambda)));
  }
  return g;
}

std::string complex_label(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
  return buf;
}

ParamMap base_params(const BargmannSpace& s) {
  return {{"lambda", s.lambda()},
          {"dim", static_cast<long long>(s.dim())},
          {"boundary", static_cast<long long>(s.boundary())}};
}

void require_quadrature(const BargmannSpace& space, const DiskQuadrature& q,
                        Index k, std::string_view what) {
  if (space.lambda() <= 1.0) {
    throw DomainError(std::string(what) +
                      ": refused: lambda <= 1, the coherent-state measure is "
                      "not normalizable and no resolution of identity exists");
  }
  if (q.radial_nodes < 32) {
    throw DomainError(std::string(what) + ": need at least 32 radial nodes");
  }
  if (q.angular_nodes < 2 * space.dim() + 1) {
    throw DomainError(std::string(what) + ": need at least 2d+1 angular nodes");
  }
  if (k < 1 || k > space.interior()) {
    throw DomainError(std::string(what) + ": block size must lie in [1, d - boundary]");
  }
}

// Samples of the trapezoid rule on one ring, refined by doubling.
class RingMoments {
 public:
  RingMoments(double radius, Index harmonics)
      : radius_(radius), sums_(ComplexVector::Zero(2 * harmonics - 1)),
        harmonics_(harmonics) {}

  // Adds the points theta = 2 pi (offset + j step) / total for j < count.
  void add(Index total, Index first, Index stride) {
    for (Index j = first; j < total; j += stride) {
      const double theta = 2.0 * kPi * static_cast<double>(j) /
                           static_cast<double>(total);
      const Complex z = std::polar(radius_, theta);
      const Complex eta = -kI * (z + 1.0) / (z - 1.0);
      const Complex step = std::polar(1.0, theta);
      Complex phase = 1.0;
      for (Index h = 0; h < harmonics_; ++h) {
        sums_(harmonics_ - 1 + h) += eta * phase;
        if (h > 0) sums_(harmonics_ - 1 - h) += eta * std::conj(phase);
        phase *= step;
      }
    }
  }

  // G_j = mean of eta e^{i j theta}, j = -(harmonics-1) .. harmonics-1.
  ComplexVector mean(Index total) const {
    return sums_ / static_cast<double>(total);
  }

 private:
  double radius_;
  ComplexVector sums_;
  Index harmonics_;
};

constexpr Index kMaxRingPoints = Index{1} << 23;

ComplexVector ring_moments(double radius, Index harmonics, Index start) {
  RingMoments ring(radius, harmonics);
  Index total = start;
  ring.add(total, 0, 1);
  ComplexVector previous = ring.mean(total);
  while (true) {
    if (2 * total > kMaxRingPoints) {
      throw ToleranceError(
          "disk_first_moment: angular refinement stalled near zeta = 1");
    }
    // Doubling keeps the old points at even indices of the finer grid.
    ring.add(2 * total, 1, 2);
    total *= 2;
    const ComplexVector current = ring.mean(total);
    const double scale = std::max(1.0, current.cwiseAbs().maxCoeff());
    if ((current - previous).cwiseAbs().maxCoeff() <= 1e-13 * scale) {
      return current;
    }
    previous = current;
  }
}

}  // namespace

DiskPoint::DiskPoint(Complex zeta) : zeta_(zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()) ||
      !(std::abs(zeta) < 1.0 - 1e-12)) {
    throw DomainError("DiskPoint: |zeta| must be below 1 - 1e-12");
  }
}

HalfPlanePoint::HalfPlanePoint(Complex eta) : eta_(eta) {
  if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag()) ||
      !(eta.imag() > 0.0)) {
    throw DomainError("HalfPlanePoint: Im eta must be positive");
  }
}

HalfPlanePoint mobius(const DiskPoint& z) {
  const Complex zeta = z.zeta();
  return HalfPlanePoint(-kI * (zeta + 1.0) / (zeta - 1.0));
}

DiskPoint inverse_mobius(const HalfPlanePoint& w) {
  const Complex eta = w.eta();
  return DiskPoint((eta - kI) / (eta + kI));
}

ComplexVector coherent_coefficients(const BargmannSpace& space, Complex zeta) {
  const double lam = space.lambda();
  const Index d = space.dim();
  ComplexVector c(d);
  c(0) = std::pow(1.0 - std::norm(zeta), 0.5 * lam);
  for (Index n = 1; n < d; ++n) {
    const double nn = static_cast<double>(n);
    c(n) = c(n - 1) * zeta * std::sqrt((lam + nn - 1.0) / nn);
  }
  return c;
}

double coherent_tail_mass(const BargmannSpace& space, Complex zeta) {
  const ComplexVector c = coherent_coefficients(space, zeta);
  const double head = c.squaredNorm();
  if (1.0 - head > 1e-8) return 1.0 - head;
  const double lam = space.lambda();
  const double r2 = std::norm(zeta);
  double term = std::norm(c(space.dim() - 1));
  double tail = 0.0;
  for (Index n = space.dim(); n < 100000000; ++n) {
    const double nn = static_cast<double>(n);
    term *= r2 * (lam + nn - 1.0) / nn;
    tail += term;
    if (term <= 1e-18 * tail && r2 * (lam + nn) / (nn + 1.0) < 1.0) break;
    if (term == 0.0) break;
  }
  return tail;
}

ComplexVector coherent_ket(const BargmannSpace& space, const DiskPoint& z) {
  const double tail = coherent_tail_mass(space, z.zeta());
  if (tail > kTailLimit) {
    throw DomainError("coherent_ket: tail mass " + format_number(tail) +
                      " beyond the truncation exceeds 1e-10; increase dim or "
                      "reduce |zeta|");
  }
  return coherent_coefficients(space, z.zeta());
}

Complex displacement_parameter(Complex zeta) {
  const double r = std::abs(zeta);
  if (r == 0.0) return 0.0;
  return std::polar(std::atanh(r), std::arg(zeta));
}

ComplexMatrix displacement_operator(const BargmannSpace& space, Complex xi) {
  if (!(std::abs(xi) <= 5.0)) {
    throw DomainError("displacement_operator: |xi| must not exceed 5");
  }
  const LadderTriple l = build_ladder_triple(space);
  return matrix_exponential(xi * l.lplus + std::conj(xi) * l.lminus);
}

AffineFamily::AffineFamily(const BargmannSpace& space)
    : dim_(space.dim()),
      eplus_(convert_basis(build_ladder_triple(space)).eplus),
      e0_(convert_basis(build_ladder_triple(space)).e0) {}

std::pair<ComplexVector, HalfPlanePoint> AffineFamily::ket(
    double s, double t, Ordering ordering) const {
  if (!(std::abs(s) <= 5.0) || !(std::abs(t) <= 1.5)) {
    throw DomainError("affine_coherent_ket: need |s| <= 5 and |t| <= 1.5");
  }
  const ComplexVector vacuum = basis_vector(dim_, 0);
  const double scale = std::exp(2.0 * t);
  if (ordering == Ordering::normal) {
    return {eplus_.apply(s, e0_.apply(t, vacuum)),
            HalfPlanePoint(Complex(s, scale))};
  }
  return {e0_.apply(t, eplus_.apply(s, vacuum)),
          HalfPlanePoint(scale * Complex(s, 1.0))};
}

std::pair<ComplexVector, HalfPlanePoint> affine_coherent_ket(
    const BargmannSpace& space, double s, double t, Ordering ordering) {
  return AffineFamily(space).ket(s, t, ordering);
}

ComplexMatrix disk_frame_operator(const BargmannSpace& space,
                                  const DiskQuadrature& q, Index k) {
  require_quadrature(space, q, k, "disk_frame_operator");
  const double lam = space.lambda();
  const QuadratureRule rule = gauss_jacobi_unit(q.radial_nodes, lam - 2.0);
  const RealVector g = pochhammer_roots(lam, k);
  const Index angular = q.angular_nodes;
  const Index columns = q.radial_nodes * angular;

  // Columns are sqrt(weight) |zeta>/(1-|zeta|^2)^{lambda/2}.
  ComplexMatrix samples(k, columns);
  for (Index i = 0; i < q.radial_nodes; ++i) {
    const double r = std::sqrt(rule.nodes(i));
    const double w = std::sqrt((lam - 1.0) * rule.weights(i) /
                               static_cast<double>(angular));
    for (Index j = 0; j < angular; ++j) {
      const double theta =
          2.0 * kPi * static_cast<double>(j) / static_cast<double>(angular);
      const Complex zeta = std::polar(r, theta);
      Complex power = w;
      for (Index n = 0; n < k; ++n) {
        samples(n, i * angular + j) = g(n) * power;
        power *= zeta;
      }
    }
  }
  return samples * samples.adjoint();
}

ComplexMatrix disk_first_moment(const BargmannSpace& space,
                                const DiskQuadrature& q, Index k) {
  require_quadrature(space, q, k, "disk_first_moment");
  const double lam = space.lambda();
  const QuadratureRule rule = gauss_jacobi_unit(q.radial_nodes, lam - 2.0);
  const RealVector g = pochhammer_roots(lam, k);
  ComplexMatrix out = ComplexMatrix::Zero(k, k);
  for (Index i = 0; i < q.radial_nodes; ++i) {
    const double u = rule.nodes(i);
    const double r = std::sqrt(u);
    const ComplexVector moments = ring_moments(r, k, q.angular_nodes);
    const double w = (lam - 1.0) * rule.weights(i);
    for (Index m = 0; m < k; ++m) {
      for (Index n = 0; n < k; ++n) {
        const double radial =
            g(m) * g(n) * std::pow(r, static_cast<double>(m + n));
        out(m, n) += w * radial * moments(k - 1 + m - n);
      }
    }
  }
  return out;
}

VerificationReport resolution_of_identity_residual(const BargmannSpace& space,
                                                   const DiskQuadrature& q,
                                                   Index k, double tol_scale) {
  const ComplexMatrix frame = disk_frame_operator(space, q, k);
  const std::string tag = lambda_tag(space.lambda());
  ParamMap params = base_params(space);
  params["block"] = static_cast<long long>(k);
  params["radial_nodes"] = static_cast<long long>(q.radial_nodes);
  params["angular_nodes"] = static_cast<long long>(q.angular_nodes);

  VerificationReport report;
  report.add("coherent.resolution_of_identity" + tag, params,
             (frame - ComplexMatrix::Identity(k, k)).norm(), 1e-6 * tol_scale,
             "disk integral of |zeta><zeta| with ((lambda-1)/pi) d^2zeta/(1-|zeta|^2)^2 "
             "equals the identity on the leading block");

  // Pushing the disk measure forward by the Mobius map must give
  // ((lambda-1)/(4 pi)) d^2eta / (Im eta)^2. The derivative is taken by
  // central differences so the check does not reuse the closed form.
  const double lam = space.lambda();
  double worst = 0.0;
  const Complex samples[] = {{0.0, 0.0}, {0.3, -0.4}, {-0.7, 0.2},
                             {0.85, 0.1}, {0.0, 0.95}, {-0.5, -0.5}};
  for (const Complex zeta : samples) {
    const double h = 1e-4;
    auto eta_at = [&](double shift) {
      return mobius(DiskPoint(zeta + shift)).eta();
    };
    const Complex deriv = (eta_at(-2.0 * h) - 8.0 * eta_at(-h) +
                           8.0 * eta_at(h) - eta_at(2.0 * h)) /
                          (12.0 * h);
    const double im_eta = mobius(DiskPoint(zeta)).eta().imag();
    const double disk_density =
        (lam - 1.0) / (kPi * std::pow(1.0 - std::norm(zeta), 2));
    const double pulled_back =
        (lam - 1.0) / (4.0 * kPi * im_eta * im_eta) * std::norm(deriv);
    worst = std::max(worst, std::abs(pulled_back / disk_density - 1.0));
  }
  report.add("coherent.halfplane_measure_jacobian" + tag, base_params(space),
             worst, 1e-8 * tol_scale,
             "((lambda-1)/(4 pi)) |d eta/d zeta|^2 / (Im eta)^2 equals "
             "((lambda-1)/pi) / (1-|zeta|^2)^2, relative, at six sample points");
  return report;
}

VerificationReport first_moment_operator(const BargmannSpace& space,
                                         const DiskQuadrature& q, Index k,
                                         double tol_scale) {
  if (k > 8) throw DomainError("first_moment_operator: block size must be <= 8");
  require_quadrature(space, q, k, "first_moment_operator");
  const std::string tag = lambda_tag(space.lambda());
  ParamMap params = base_params(space);
  params["block"] = static_cast<long long>(k);
  params["radial_nodes"] = static_cast<long long>(q.radial_nodes);

  VerificationReport report;
  const ComplexMatrix a_op = operator_A(space);
  try {
    const ComplexMatrix moment = disk_first_moment(space, q, k);
    report.add("coherent.first_moment.vacuum" + tag, params,
               std::abs(moment(0, 0) - a_op(0, 0)), 1e-3 * tol_scale,
               "<0| integral eta M(d eta) |0> = <0|A|0> = i");
    report.add("coherent.first_moment.block" + tag, params,
               (moment - a_op.topLeftCorner(k, k)).cwiseAbs().maxCoeff(),
               2e-3 * tol_scale,
               "integral eta M(d eta) = A entrywise on the leading block");
  } catch (const ToleranceError& e) {
    report.add("coherent.first_moment.block" + tag, params,
               std::numeric_limits<double>::infinity(), 2e-3 * tol_scale,
               std::string("non-convergence: ") + e.what());
  }
  const Index k0 = std::min<Index>(k, 4);
  ParamMap zeroth = params;
  zeroth["block"] = static_cast<long long>(k0);
  report.add("coherent.zeroth_moment" + tag, zeroth,
             (disk_frame_operator(space, q, k0) - ComplexMatrix::Identity(k0, k0))
                 .norm(),
             1e-6 * tol_scale, "integral M(d eta) = 1 on the leading block");
  return report;
}

std::vector<double> husimi_density(const BargmannSpace& space,
                                   const ComplexVector& psi,
                                   const std::vector<DiskPoint>& points) {
  if (psi.size() != space.dim()) {
    throw DomainError("husimi_density: state dimension does not match the space");
  }
  require_finite(psi, "husimi_density");
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw DomainError("husimi_density: state must have unit norm");
  }
  std::vector<double> out;
  out.reserve(points.size());
  for (const DiskPoint& p : points) {
    const Complex overlap =
        coherent_coefficients(space, p.zeta()).dot(psi);
    out.push_back(std::norm(overlap));
  }
  return out;
}

VerificationReport verify_coherent(const BargmannSpace& space,
                                   const BargmannSpace& affine_space,
                                   double tol_scale) {
  VerificationReport report;
  const double lam = space.lambda();
  const std::string tag = lambda_tag(lam);
  const ParamMap params = base_params(space);
  const Index d = space.dim();

  const Complex zetas[] = {{0.0, 0.0},  {0.3, 0.0},   {0.0, 0.6},
                           {-0.45, 0.3}, {0.42, -0.42}, {0.6, 0.0},
                           {-0.2, -0.55}};
  const ComplexMatrix a = annihilator_a(space);
  const ComplexMatrix big_a = operator_A(space);
  double eig = 0.0;
  double overlap = 0.0;
  double norm_dev = 0.0;
  double conj_dev = 0.0;
  double round_trip = 0.0;
  for (const Complex zeta : zetas) {
    const DiskPoint z(zeta);
    const ComplexVector ket = coherent_ket(space, z);
    eig = std::max(eig, (a * ket - zeta * ket).norm());
    overlap = std::max(overlap, std::abs(std::norm(ket(0)) -
                                         std::pow(1.0 - std::norm(zeta), lam)));
    norm_dev = std::max(norm_dev, std::abs(ket.norm() - 1.0));
    const HalfPlanePoint w = mobius(z);
    conj_dev = std::max(conj_dev, (big_a * ket - w.eta() * ket).norm());
    round_trip = std::max(round_trip, std::abs(inverse_mobius(w).zeta() - zeta));
  }
  ParamMap zeta_params = params;
  zeta_params["max_abs_zeta"] = 0.6;
  report.add("coherent.eigenvector_a" + tag, zeta_params, eig, 1e-8 * tol_scale,
             "a|zeta> = zeta|zeta> for |zeta| <= 0.6");
  report.add("coherent.vacuum_overlap" + tag, zeta_params, overlap,
             1e-10 * tol_scale, "|<0|zeta>|^2 = (1-|zeta|^2)^lambda");
  report.add("coherent.unit_norm" + tag, zeta_params, norm_dev,
             1e-10 * tol_scale, "coherent states have unit norm");
  report.add("coherent.mobius_conjugacy" + tag, zeta_params, conj_dev,
             1e-8 * tol_scale,
             "A|zeta> = eta|zeta> with eta = -i(zeta+1)/(zeta-1)");
  report.add("coherent.mobius_round_trip" + tag, zeta_params, round_trip,
             1e-14 * tol_scale, "zeta -> eta -> zeta is the identity");

  {
    const Complex xi(0.3, 0.2);
    const ComplexMatrix disp = displacement_operator(space, xi);
    ParamMap p = params;
    p["xi"] = complex_label(xi);
    report.add("coherent.displacement_unitary" + tag, p,
               interior_residual_norm(
                   disp.adjoint() * disp - ComplexMatrix::Identity(d, d),
                   space.boundary()),
               1e-9 * tol_scale, "D(xi)^* D(xi) = 1 on the interior");
    const Complex zeta(0.0, 0.4);
    const ComplexVector via_exp =
        displacement_operator(space, displacement_parameter(zeta)) *
        basis_vector(d, 0);
    ParamMap pz = params;
    pz["zeta"] = complex_label(zeta);
    report.add("coherent.displacement_route" + tag, pz,
               (via_exp - coherent_ket(space, DiskPoint(zeta))).norm(),
               1e-8 * tol_scale,
               "exp(xi L+ - conj(xi) L+^*)|0> with xi = e^{i arg zeta} "
               "artanh|zeta| equals the closed-form |zeta>");
  }

  {
    const AffineFamily family(affine_space);
    const ComplexMatrix a_aff = operator_A(affine_space);
    double worst_normal = 0.0;
    double worst_anti = 0.0;
    double worst_norm = 0.0;
    for (int si = -4; si <= 4; ++si) {
      for (int ti = -4; ti <= 4; ++ti) {
        const double s = 0.5 * si;
        const double t = 0.125 * ti;
        for (const Ordering o : {Ordering::normal, Ordering::antinormal}) {
          const auto [ket, w] = family.ket(s, t, o);
          const double r = (a_aff * ket - w.eta() * ket).norm();
          (o == Ordering::normal ? worst_normal : worst_anti) =
              std::max(o == Ordering::normal ? worst_normal : worst_anti, r);
          worst_norm = std::max(worst_norm, std::abs(ket.norm() - 1.0));
        }
      }
    }
    ParamMap p = base_params(affine_space);
    p["s_max"] = 2.0;
    p["t_max"] = 0.5;
    const std::string atag = lambda_tag(affine_space.lambda());
    report.add("coherent.affine.normal_eigenvalue" + atag, p, worst_normal,
               1e-7 * tol_scale,
               "A exp(sE+)exp(tE0)|0> = (e^{2t} i + s) exp(sE+)exp(tE0)|0>");
    report.add("coherent.affine.antinormal_eigenvalue" + atag, p, worst_anti,
               1e-7 * tol_scale,
               "A exp(tE0)exp(sE+)|0> = e^{2t}(i + s) exp(tE0)exp(sE+)|0>");
    report.add("coherent.affine.unit_norm" + atag, p, worst_norm,
               1e-9 * tol_scale, "affine coherent vectors have unit norm");
  }
  return report;
}

}  // namespace su11kit
