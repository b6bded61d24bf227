// Microbenchmarks for the hot numerical paths: reconstruction traces, both
// constant estimators, the exact sign sweep, and the tail-norm ascent.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "framelab/besselian.hpp"
#include "framelab/corpus.hpp"
#include "framelab/frame.hpp"
#include "framelab/rng.hpp"
#include "framelab/unconditional.hpp"

using namespace framelab;

namespace {

Frame block_frame(int dim) {
  std::string id = "fdd_random:lp:2:" + std::to_string(dim) + ":blocks=";
  for (int i = 0; i < dim / 4; ++i) id += (i ? ",4" : "4");
  id += ":seed=5";
  return make_corpus_frame(id);
}

}  // namespace

static void BM_reconstruction_trace(benchmark::State& state) {
  const Frame f = block_frame(static_cast<int>(state.range(0)));
  Rng rng(1);
  const Vector x = random_unit_vector(f.space, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruction_trace(f, x));
}
BENCHMARK(BM_reconstruction_trace)->Arg(16)->Arg(64);

static void BM_besselian_exact(benchmark::State& state) {
  const Frame f = summing_basis_frame(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(besselian_constant_exact(f));
}
BENCHMARK(BM_besselian_exact)->Arg(8)->Arg(12);

static void BM_besselian_ascent(benchmark::State& state) {
  const Frame f =
      canonical_basis_frame(SpaceSpec::Lp(2.0, static_cast<int>(state.range(0))));
  AscentOptions opts;
  opts.restarts = 8;
  for (auto _ : state)
    benchmark::DoNotOptimize(besselian_constant_ascent(f, opts));
}
BENCHMARK(BM_besselian_ascent)->Arg(16)->Arg(64);

static void BM_sign_sweep_exact(benchmark::State& state) {
  const Frame f = summing_basis_frame(static_cast<int>(state.range(0)));
  Vector x = zero_vector(f.space);
  for (int i = 0; i < f.dim(); ++i) x.coords[i] = (i % 2 == 0) ? 1.0 : -1.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        unconditionality_constant(f, x, SignSearchMode::exact, 0, 0));
}
BENCHMARK(BM_sign_sweep_exact)->Arg(12)->Arg(16);

static void BM_sign_search_sampled(benchmark::State& state) {
  const Frame f = summing_basis_frame(static_cast<int>(state.range(0)));
  Vector x = zero_vector(f.space);
  for (int i = 0; i < f.dim(); ++i) x.coords[i] = (i % 2 == 0) ? 1.0 : -1.0;
  const std::int64_t budget = 64 * f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        unconditionality_constant(f, x, SignSearchMode::sampled, budget, 3));
}
BENCHMARK(BM_sign_search_sampled)->Arg(32)->Arg(64);

static void BM_tail_norm(benchmark::State& state) {
  const Frame f = summing_basis_frame(static_cast<int>(state.range(0)));
  Rng rng(7);
  const Vector y = random_unit_vector(dual_space(f.space), rng);
  const int m = f.size() / 4;
  for (auto _ : state)
    benchmark::DoNotOptimize(tail_functional_norm(f, y, m));
}
BENCHMARK(BM_tail_norm)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
