#include "distributions.hpp"
#include "output.hpp"
#include "parse.hpp"
#include "suites.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

using namespace su11kit;
using namespace su11kit::cli;

namespace {

struct CommonFlags {
  std::string lambda;
  std::optional<long long> dim;
  std::optional<long long> boundary;
  std::uint64_t seed = 1;
  std::string tol_scale = "1";
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& f, bool tables) {
  cmd->add_option("--lambda", f.lambda, "Bargmann index (accepts e.g. 1.5 or exp(0.2))");
  cmd->add_option("--dim", f.dim, "Truncation dimension (grid points for the wavelet suite)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--boundary", f.boundary, "Rows excluded from interior residuals")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", f.seed, "Seed for random densities");
  cmd->add_option("--tol-scale", f.tol_scale, "Factor applied to every tolerance");
  cmd->add_option("--out", f.out, "Output path (stdout when omitted)");
  if (tables) {
    f.format = "csv";
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv"}));
  } else {
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  }
}

int run_verify(const std::string& suite_text, const CommonFlags& f,
               const std::string& k_text) {
  SuiteConfig config;
  if (!f.lambda.empty()) config.lambda = parse_real(f.lambda);
  if (!k_text.empty()) config.k = parse_real(k_text);
  config.dim = f.dim;
  config.boundary = f.boundary;
  config.seed = f.seed;
  config.tol_scale = parse_real(f.tol_scale);
  if (!(config.tol_scale > 0.0)) throw UsageError("--tol-scale must be positive");

  const Suite suite = parse_suite(suite_text);
  const VerificationReport report = run_checks(suite, config);
  write_output(f.out, f.format == "csv" ? report_csv(report) : report_json(report));
  if (!report.all_pass()) {
    std::cerr << report.failure_count() << " check(s) failed\n";
    for (const ReportEntry& e : report.sorted_entries()) {
      if (!e.pass) {
        std::cerr << "  " << e.check_id << ": residual " << format_number(e.residual)
                  << " > " << format_number(e.tolerance) << '\n';
      }
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks and data dumps for truncated su(1,1) representations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SU11KIT_VERSION);

  CommonFlags verify_flags;
  std::string suite;
  std::string k_text;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "algebra|coherent|boson|wavelet|extension|all")
      ->required();
  verify->add_option("--k", k_text, "Wavelet parameter k (lambda = 2k + 1)");
  add_common(verify, verify_flags, false);

  CommonFlags density_flags;
  std::string state = "n:0";
  Index radial = 64;
  Index angular = 64;
  CLI::App* density = app.add_subcommand("density", "Husimi density on a polar disk grid");
  density->add_option("--state", state, "n:K or zeta:<complex>");
  density->add_option("--radial", radial, "Radial points r = j/R");
  density->add_option("--angular", angular, "Angular points");
  add_common(density, density_flags, true);

  CommonFlags wave_flags;
  std::string mu_nu, odd, wavelet_k, grid_text;
  std::string shift_text = "0", dilation_text = "0";
  CLI::App* wave = app.add_subcommand("wavefunction", "Sampled wavefunction of a state");
  auto* o_mn = wave->add_option("--mu-nu", mu_nu, "Squeezed vacuum MU,NU (complex values as re+imi)");
  auto* o_odd = wave->add_option("--odd", odd, "Odd squeezed state P,TQ");
  auto* o_wav = wave->add_option("--wavelet", wavelet_k, "Affine wavelet state with parameter k");
  o_mn->excludes(o_odd)->excludes(o_wav);
  o_odd->excludes(o_wav);
  wave->add_option("--s", shift_text, "Wavelet shift s");
  wave->add_option("--t", dilation_text, "Wavelet dilation t");
  wave->add_option("--grid", grid_text, "N,EXTENT (position: 2048,12; wavelet: 4096,20(k+1))");
  add_common(wave, wave_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(suite, verify_flags, k_text);

    if (density->parsed()) {
      DensityConfig config;
      if (!density_flags.lambda.empty()) config.lambda = parse_real(density_flags.lambda);
      if (density_flags.dim) config.dim = static_cast<Index>(*density_flags.dim);
      config.state = parse_disk_state(state);
      config.radial = radial;
      config.angular = angular;
      const Table table = husimi_table(config);
      write_output(density_flags.out, numeric_csv(table.header, table.rows));
      return 0;
    }

    WavefunctionConfig config;
    if (!mu_nu.empty()) {
      const auto [mu, nu] = split_pair(mu_nu);
      config.state = SqueezedSpec{parse_complex(mu), parse_complex(nu)};
    } else if (!odd.empty()) {
      const auto [p, tq] = split_pair(odd);
      config.state = OddSqueezedSpec{parse_real(p), parse_real(tq)};
    } else if (!wavelet_k.empty()) {
      config.state = WaveletSpec{parse_real(wavelet_k), parse_real(shift_text),
                                 parse_real(dilation_text)};
    } else {
      throw UsageError("wavefunction needs one of --mu-nu, --odd, --wavelet");
    }
    if (!grid_text.empty()) {
      const auto [n, extent] = split_pair(grid_text);
      const double count = parse_real(n);
      if (count < 1 || count != std::floor(count)) throw UsageError("--grid point count must be a positive integer");
      config.grid = std::pair<Index, double>{static_cast<Index>(count), parse_real(extent)};
    }
    const Table table = wavefunction_table(config);
    write_output(wave_flags.out, numeric_csv(table.header, table.rows));
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const ToleranceError& e) {
    std::cerr << "tolerance failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
