#include "distributions.hpp"

#include "su11kit/bosonreal.hpp"
#include "su11kit/cauchywavelet.hpp"
#include "su11kit/coherent.hpp"

#include <cmath>
#include <numbers>

namespace su11kit::cli {

Table husimi_table(const DensityConfig& config) {
  if (config.radial < 1 || config.angular < 1) {
    throw UsageError("--radial and --angular must be positive");
  }
  const BargmannSpace space(config.lambda, config.dim);
  ComplexVector psi;
  if (const auto* n = std::get_if<NumberStateSpec>(&config.state)) {
    if (n->n >= space.dim()) throw UsageError("number state index must be below --dim");
    psi = basis_vector(space.dim(), n->n);
  } else {
    psi = coherent_ket(space, DiskPoint(std::get<CoherentStateSpec>(config.state).zeta));
  }

  std::vector<DiskPoint> points;
  Table table{{"r", "theta", "re_zeta", "im_zeta", "density"}, {}};
  for (Index j = 0; j < config.radial; ++j) {
    const double r = static_cast<double>(j) / static_cast<double>(config.radial);
    for (Index m = 0; m < config.angular; ++m) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(config.angular);
      const Complex zeta = std::polar(r, theta);
      points.emplace_back(zeta);
      table.rows.push_back({r, theta, zeta.real(), zeta.imag(), 0.0});
    }
  }
  const std::vector<double> density = husimi_density(space, psi, points);
  for (std::size_t i = 0; i < density.size(); ++i) table.rows[i][4] = density[i];
  return table;
}

namespace {

Table sampled(const char* axis, const RealVector& points, const ComplexVector& v,
              double spacing) {
  Table table{{axis, "re", "im"}, {}};
  const double scale = 1.0 / std::sqrt(spacing);
  for (Index j = 0; j < v.size(); ++j) {
    table.rows.push_back({points(j), v(j).real() * scale, v(j).imag() * scale});
  }
  return table;
}

}  // namespace

Table wavefunction_table(const WavefunctionConfig& config) {
  if (const auto* w = std::get_if<WaveletSpec>(&config.state)) {
    const WaveletParams params(w->k);
    const auto [count, extent] =
        config.grid.value_or(std::pair<Index, double>{4096, 20.0 * (w->k + 1.0)});
    const HalfLineGrid grid(count, extent);
    grid.require_containment(params);
    const auto [v, eigenvalue] =
        wavelet_affine_state(params, grid, w->s, w->t, Ordering::normal);
    return sampled("p", grid.points(), v, grid.spacing());
  }
  const auto [count, extent] = config.grid.value_or(std::pair<Index, double>{2048, 12.0});
  const PositionGrid grid = PositionGrid::from_points(count, extent);
  if (const auto* s = std::get_if<SqueezedSpec>(&config.state)) {
    const ComplexVector v = squeezed_vacuum(SqueezeParams(s->mu, s->nu), grid);
    return sampled("q", grid.points(), v, grid.spacing());
  }
  const auto& o = std::get<OddSqueezedSpec>(config.state);
  const auto [v, eigenvalue] = odd_squeezed_state(o.p, o.tq, grid);
  return sampled("q", grid.points(), v, grid.spacing());
}

}  // namespace su11kit::cli
