#pragma once

#include "su11kit/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace su11kit::cli {

enum class Suite { algebra, coherent, boson, wavelet, extension, all };

/// Throws UsageError for an unknown name.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

/// Unset values fall back to each suite's defaults.
struct SuiteConfig {
  std::optional<double> lambda;
  std::optional<long long> dim;
  std::optional<long long> boundary;
  std::optional<double> k;  ///< wavelet parameter; overrides --lambda there
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
};

using Task = std::function<VerificationReport()>;

/// Independent report producers for one suite, in a fixed order.
std::vector<Task> suite_tasks(Suite suite, const SuiteConfig& config);

/// Worker count: hardware concurrency capped by SU11KIT_THREADS. Throws
/// UsageError when the variable is set but not a positive integer.
unsigned worker_count();

/// Runs tasks on up to `workers` threads and merges the reports in task
/// order. The first task exception (in task order) is rethrown.
VerificationReport run_tasks(const std::vector<Task>& tasks, unsigned workers);

/// Runs a suite and fills the metadata (tool, version, suite, seed,
/// tol_scale, the given config values, timestamp).
VerificationReport run_checks(Suite suite, const SuiteConfig& config);

}  // namespace su11kit::cli
