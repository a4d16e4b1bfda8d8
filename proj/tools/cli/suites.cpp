#include "suites.hpp"

#include "parse.hpp"
#include "output.hpp"

#include "su11kit/bosonreal.hpp"
#include "su11kit/cauchywavelet.hpp"
#include "su11kit/coherent.hpp"
#include "su11kit/normalext.hpp"
#include "su11kit/su11core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <memory>
#include <thread>

#ifndef SU11KIT_VERSION
#define SU11KIT_VERSION "0.0.0"
#endif

namespace su11kit::cli {

namespace {

Index dim_or(const SuiteConfig& c, Index fallback) {
  return c.dim ? static_cast<Index>(*c.dim) : fallback;
}

Index boundary_or(const SuiteConfig& c, Index fallback) {
  return c.boundary ? static_cast<Index>(*c.boundary) : fallback;
}

void add_algebra(std::vector<Task>& tasks, const SuiteConfig& c) {
  std::vector<double> lambdas{0.5, 1.0, 1.5, 2.5, 3.0};
  if (c.lambda) lambdas = {*c.lambda};
  const Index d = dim_or(c, 64);
  const Index b = boundary_or(c, 8);
  for (double lam : lambdas) {
    tasks.emplace_back([=] {
      return verify_structure(BargmannSpace(lam, d, b), c.tol_scale);
    });
  }
}

// The resolution of identity only exists for lambda > 1; below that the
// library refuses and the suite records the refusal as expected behavior.
VerificationReport resolution_or_refusal(const BargmannSpace& space, double tol_scale) {
  DiskQuadrature quad;
  quad.angular_nodes = std::max<Index>(quad.angular_nodes, 2 * space.dim() + 1);
  if (space.lambda() <= 1.0) {
    VerificationReport report;
    try {
      resolution_of_identity_residual(space, quad, 16, tol_scale);
    } catch (const DomainError& e) {
      report.add("coherent.resolution_of_identity" + lambda_tag(space.lambda()),
                 {{"lambda", space.lambda()}, {"dim", static_cast<long long>(space.dim())}},
                 0.0, 0.0, std::string("refused: lambda <= 1; ") + e.what());
      return report;
    }
    report.add("coherent.resolution_of_identity" + lambda_tag(space.lambda()),
               {{"lambda", space.lambda()}}, 1.0, 0.0,
               "expected a refusal for lambda <= 1");
    return report;
  }
  VerificationReport report = resolution_of_identity_residual(space, quad, 16, tol_scale);
  report.append(first_moment_operator(space, quad, 8, tol_scale));
  return report;
}

void add_coherent(std::vector<Task>& tasks, const SuiteConfig& c) {
  const double lam = c.lambda.value_or(1.5);
  const Index d = dim_or(c, 64);
  const Index b = boundary_or(c, 8);
  const BargmannSpace space(lam, d, b);
  tasks.emplace_back([=] {
    return verify_coherent(space, BargmannSpace(lam, 256), c.tol_scale);
  });
  tasks.emplace_back([=] { return resolution_or_refusal(space, c.tol_scale); });
  if (!c.lambda) {
    tasks.emplace_back([=] {
      return resolution_or_refusal(BargmannSpace(0.5, d, b), c.tol_scale);
    });
  }
}

void add_boson(std::vector<Task>& tasks, const SuiteConfig& c) {
  const Index d = dim_or(c, 64);
  tasks.emplace_back([=] {
    return verify_boson(FockBasisSpec(d), PositionGrid::from_points(2048, 12.0),
                        c.tol_scale);
  });
}

void add_wavelet(std::vector<Task>& tasks, const SuiteConfig& c) {
  std::vector<double> ks{0.5, 1.0, 2.0};
  if (c.k) {
    ks = {*c.k};
  } else if (c.lambda) {
    if (*c.lambda <= 1.0) throw DomainError("wavelet suite needs lambda = 2k + 1 > 1");
    ks = {(*c.lambda - 1.0) / 2.0};
  }
  const Index n = dim_or(c, 4096);
  for (double k : ks) {
    const WaveletParams params(k);
    const HalfLineGrid grid(n, 20.0 * (k + 1.0));
    tasks.emplace_back([=] { return wavelet_checks(params, grid, 12, c.tol_scale); });
  }
}

void add_extension(std::vector<Task>& tasks, const SuiteConfig& c) {
  const Index d = dim_or(c, 48);
  const Index b = boundary_or(c, 12);
  std::vector<double> lambdas{1.5, 0.5};
  if (c.lambda) lambdas = {*c.lambda};
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 5; ++s) seeds.push_back(c.seed + s);

  for (double lam : lambdas) {
    const ExtensionMode mode =
        lam > 1.0 ? ExtensionMode::extend_A : ExtensionMode::extend_A_adjoint;
    // Built here so precondition failures surface before any work starts.
    const auto triplet = std::make_shared<const ExtensionTriplet>(
        build_normal_extension(BargmannSpace(lam, d, b), mode));
    tasks.emplace_back([=] {
      VerificationReport report = verify_extension(*triplet, seeds, c.tol_scale);
      report.append(second_moment_check(*triplet, seeds, c.tol_scale));
      return report;
    });
  }
  if (!c.lambda) {
    tasks.emplace_back([=] { return pq_realization_check(FockBasisSpec(2 * d), c.tol_scale); });
  }
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "algebra") return Suite::algebra;
  if (name == "coherent") return Suite::coherent;
  if (name == "boson") return Suite::boson;
  if (name == "wavelet") return Suite::wavelet;
  if (name == "extension") return Suite::extension;
  if (name == "all") return Suite::all;
  throw UsageError("unknown suite '" + name + "'");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::algebra: return "algebra";
    case Suite::coherent: return "coherent";
    case Suite::boson: return "boson";
    case Suite::wavelet: return "wavelet";
    case Suite::extension: return "extension";
    case Suite::all: return "all";
  }
  return "";
}

std::vector<Task> suite_tasks(Suite suite, const SuiteConfig& config) {
  std::vector<Task> tasks;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::algebra) add_algebra(tasks, config);
  if (all || suite == Suite::coherent) add_coherent(tasks, config);
  if (all || suite == Suite::boson) add_boson(tasks, config);
  if (all || suite == Suite::wavelet) add_wavelet(tasks, config);
  if (all || suite == Suite::extension) add_extension(tasks, config);
  return tasks;
}

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SU11KIT_THREADS"); env && *env) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (*end != '\0' || cap < 1) {
      throw UsageError("SU11KIT_THREADS must be a positive integer, got '" +
                       std::string(env) + "'");
    }
    workers = std::min(workers, static_cast<unsigned>(std::min(cap, 1024L)));
  }
  return workers;
}

VerificationReport run_tasks(const std::vector<Task>& tasks, unsigned workers) {
  std::vector<VerificationReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(std::max(1u, workers), tasks.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  VerificationReport merged;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    merged.append(results[i]);
  }
  return merged;
}

VerificationReport run_checks(Suite suite, const SuiteConfig& config) {
  VerificationReport report = run_tasks(suite_tasks(suite, config), worker_count());
  auto& meta = report.metadata();
  meta["tool"] = "su11kit";
  meta["version"] = SU11KIT_VERSION;
  meta["suite"] = suite_name(suite);
  meta["seed"] = std::to_string(config.seed);
  meta["tol_scale"] = format_number(config.tol_scale);
  if (config.lambda) meta["lambda"] = format_number(*config.lambda);
  if (config.dim) meta["dim"] = std::to_string(*config.dim);
  if (config.boundary) meta["boundary"] = std::to_string(*config.boundary);
  if (config.k) meta["k"] = format_number(*config.k);
  meta["timestamp"] = utc_timestamp();
  return report;
}

}  // namespace su11kit::cli
