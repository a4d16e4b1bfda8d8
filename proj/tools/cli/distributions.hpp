#pragma once

#include "parse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace su11kit::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

struct DensityConfig {
  double lambda = 1.5;
  Index dim = 64;
  DiskStateSpec state = NumberStateSpec{0};
  Index radial = 64;
  Index angular = 64;
};

/// Husimi density |<zeta|psi>|^2 on r_j = j/radial, theta_m = 2 pi m/angular;
/// columns r, theta, re_zeta, im_zeta, density.
Table husimi_table(const DensityConfig& config);

struct SqueezedSpec {
  Complex mu;
  Complex nu;
};
struct OddSqueezedSpec {
  double p;
  double tq;
};
struct WaveletSpec {
  double k;
  double s = 0.0;
  double t = 0.0;
};

struct WavefunctionConfig {
  std::variant<SqueezedSpec, OddSqueezedSpec, WaveletSpec> state;
  /// Point count and extent; the wavelet default is 4096 points on
  /// [0, 20(k + 1)].
  std::optional<std::pair<Index, double>> grid;
};

/// Position-space samples (q, re, im) for boson states or momentum-space
/// samples (p, re, im) for affine wavelet states, as function values.
Table wavefunction_table(const WavefunctionConfig& config);

}  // namespace su11kit::cli
