#include <benchmark/benchmark.h>

#include "gokit/builtins.hpp"
#include "gokit/equilibria.hpp"
#include "gokit/goanalysis.hpp"
#include "gokit/liepoisson.hpp"
#include "gokit/rng.hpp"

namespace {

using namespace gokit;

void BM_SolveEquilibria(benchmark::State& state) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  CounterRng rng(0, "bench_solve");
  const Covector p = rng.normal_vector(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_equilibria_at(built.model, built.form, p));
  }
}
BENCHMARK(BM_SolveEquilibria);

void BM_MinNormGraph(benchmark::State& state) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  CounterRng rng(0, "bench_graph");
  const Covector p = rng.normal_vector(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_norm_graph(built.model, built.form, p));
  }
}
BENCHMARK(BM_MinNormGraph);

void BM_GoTest(benchmark::State& state) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  GoTestOptions opts;
  opts.samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(go_test(built.model, built.form, opts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GoTest)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_LiePoissonRk4(benchmark::State& state) {
  const auto g = builtins::su3();
  const Polynomial z = Polynomial::variable(8, builtins::su3_index::Z);
  const Polynomial h = 0.5 * (z * z) + 0.1 * builtins::su3_y2();
  DualVector mu0(8);
  mu0 << 0.3, -0.2, 0.5, 1.0, 2.0, -1.0, 0.5, 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(g, h, mu0, 1e-3, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_LiePoissonRk4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
