#include <benchmark/benchmark.h>

#include "burgers/simulate.hpp"
#include "burgers/stationary.hpp"

namespace {

void BM_Step(benchmark::State& state) {
  const burgers::ProblemSpec spec(1, 1, 1, -1);
  const auto profile = burgers::solve_stationary(spec);
  auto field = burgers::perturbed_stationary_field(profile, spec,
                                                   static_cast<int>(state.range(0)), 1e-3);
  const double dt = burgers::stable_dt(field, spec);
  for (auto _ : state) burgers::step(field, spec, dt);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Step)->Arg(100)->Arg(400)->Arg(800)->Arg(3200);

void BM_DiscreteStationary(benchmark::State& state) {
  const burgers::ProblemSpec spec(1, 1, 1, -1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        burgers::discrete_stationary(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DiscreteStationary)->Arg(400)->Arg(800);

}  // namespace

BENCHMARK_MAIN();
