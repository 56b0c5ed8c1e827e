#include <benchmark/benchmark.h>

#include "pptgeo/bipartite.hpp"
#include "pptgeo/distill.hpp"
#include "pptgeo/linalg.hpp"
#include "pptgeo/states.hpp"

using namespace pptgeo;

static void BM_HermitianEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DensityMatrix rho = sample_hs_random(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(rho.matrix()));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(9)->Arg(16)->Arg(25);

static void BM_PartialTranspose(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const DensityMatrix rho = sample_hs_random(d * d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(rho, {d, d}));
}
BENCHMARK(BM_PartialTranspose)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_IsPpt(benchmark::State& state) {
  const DensityMatrix rho = sample_hs_random(9, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_ppt(rho, {3, 3}));
}
BENCHMARK(BM_IsPpt);

static void BM_SampleOnShell(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sample_on_shell(9, 0.2, rng));
}
BENCHMARK(BM_SampleOnShell);

static void BM_WitnessSearch(benchmark::State& state) {
  const DensityMatrix rho = werner({3, 0.2});
  WitnessOptions options;
  options.restarts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_schmidt2_witness(rho, {3, 3}, options));
}
BENCHMARK(BM_WitnessSearch)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
