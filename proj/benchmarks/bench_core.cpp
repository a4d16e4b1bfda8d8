#include "su11kit/cauchywavelet.hpp"
#include "su11kit/coherent.hpp"
#include "su11kit/normalext.hpp"

#include <benchmark/benchmark.h>

using namespace su11kit;

static void BM_LadderTriple(benchmark::State& state) {
  const BargmannSpace space(1.5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ladder_triple(space));
}
BENCHMARK(BM_LadderTriple)->Arg(64)->Arg(256);

static void BM_MatrixExponential(benchmark::State& state) {
  const BargmannSpace space(1.5, state.range(0));
  const LadderTriple l = build_ladder_triple(space);
  const ComplexMatrix m = Complex(0.3, 0.2) * l.lplus + Complex(0.3, -0.2) * l.lminus;
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exponential(m));
}
BENCHMARK(BM_MatrixExponential)->Arg(64)->Arg(128);

static void BM_VerifyStructure(benchmark::State& state) {
  const BargmannSpace space(1.5, 64, 8);
  for (auto _ : state) benchmark::DoNotOptimize(verify_structure(space));
}
BENCHMARK(BM_VerifyStructure)->Unit(benchmark::kMillisecond);

static void BM_DiskFrameOperator(benchmark::State& state) {
  const BargmannSpace space(1.5, 64, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(disk_frame_operator(space, DiskQuadrature{}, 16));
  }
}
BENCHMARK(BM_DiskFrameOperator)->Unit(benchmark::kMillisecond);

static void BM_HusimiGrid(benchmark::State& state) {
  const BargmannSpace space(1.5, 64);
  std::vector<DiskPoint> points;
  for (int j = 0; j < 64; ++j) {
    for (int m = 0; m < 64; ++m) points.emplace_back(std::polar(j / 64.0, 0.09817477 * m));
  }
  const ComplexVector psi = basis_vector(64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(husimi_density(space, psi, points));
}
BENCHMARK(BM_HusimiGrid)->Unit(benchmark::kMillisecond);

static void BM_WaveletOperators(benchmark::State& state) {
  const WaveletParams params(1.0);
  const HalfLineGrid grid(state.range(0), 40.0);
  const WaveletOperators ops(params, grid);
  const ComplexVector h = vacuum_Hk(params, grid);
  for (auto _ : state) benchmark::DoNotOptimize(ops.casimir(h));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WaveletOperators)->Arg(4096)->Arg(16384);

static void BM_WaveletChecks(benchmark::State& state) {
  const WaveletParams params(1.0);
  const HalfLineGrid grid(4096, 40.0);
  for (auto _ : state) benchmark::DoNotOptimize(wavelet_checks(params, grid));
}
BENCHMARK(BM_WaveletChecks)->Unit(benchmark::kMillisecond);

static void BM_ExtensionNormality(benchmark::State& state) {
  const ExtensionTriplet t =
      build_normal_extension(BargmannSpace(1.5, state.range(0), state.range(0) / 4),
                             ExtensionMode::extend_A);
  const KroneckerSum terms = extension_terms(t);
  const Index k = t.primary_space.interior();
  for (auto _ : state) benchmark::DoNotOptimize(normality_residuals(terms, t.eplus, k, k));
}
BENCHMARK(BM_ExtensionNormality)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
