// Microbenchmarks for the hot paths: twisted convolution (both routes),
// wave-operator assembly, exact rotation, and the bracket.

#include <benchmark/benchmark.h>

#include "pmech/convolution.hpp"
#include "pmech/oscillator.hpp"
#include "pmech/pbracket.hpp"
#include "pmech/schrodinger.hpp"
#include "pmech/signals.hpp"

namespace {

using namespace pmech;

void BM_convolve_fast_16(benchmark::State& state) {
  const GridSpec g = oracle_grid_16();
  const auto catalog = random_catalog(g, 2, 42u);
  const PFunction a = sample_signal(g, catalog[0]);
  const PFunction b = sample_signal(g, catalog[1]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_fast(a, b));
  }
}
BENCHMARK(BM_convolve_fast_16);

void BM_convolve_direct_16(benchmark::State& state) {
  const GridSpec g = oracle_grid_16();
  const auto catalog = random_catalog(g, 2, 42u);
  const PFunction a = sample_signal(g, catalog[0]);
  const PFunction b = sample_signal(g, catalog[1]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_direct(a, b));
  }
}
BENCHMARK(BM_convolve_direct_16);

void BM_convolve_fast_32(benchmark::State& state) {
  const GridSpec g = catalog_grid_32();
  const PFunction a = sample_signal(g, bracket_signal(0));
  const PFunction b = sample_signal(g, bracket_signal(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_fast(a, b));
  }
}
BENCHMARK(BM_convolve_fast_32);

void BM_pbracket_32(benchmark::State& state) {
  const GridSpec g = catalog_grid_32();
  const PFunction a = sample_signal(g, bracket_signal(0));
  const PFunction b = sample_signal(g, bracket_signal(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbracket(a, b));
  }
}
BENCHMARK(BM_pbracket_32);

void BM_rep_quantize_64(benchmark::State& state) {
  const GridSpec g = catalog_grid_32();
  const PFunction k = sample_signal(g, bracket_signal(1));
  const WaveGrid wg{64, 12.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rep_quantize(k, wg, 0.5));
  }
}
BENCHMARK(BM_rep_quantize_64);

void BM_rotate_exact(benchmark::State& state) {
  const GridSpec g = catalog_grid_32();
  const PFunction f = sample_signal(g, bracket_signal(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotate_exact(f, 0.7));
  }
}
BENCHMARK(BM_rotate_exact);

}  // namespace

BENCHMARK_MAIN();
