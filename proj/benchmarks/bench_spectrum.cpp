#include <benchmark/benchmark.h>

#include "burgers/lyapunov.hpp"
#include "burgers/spectrum.hpp"
#include "burgers/stationary.hpp"

namespace {

void BM_Spectrum(benchmark::State& state) {
  const burgers::ProblemSpec spec(1, 1, 1, -1);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(burgers::spectrum(spec, count));
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(16)->Arg(64);

void BM_SolveStationary(benchmark::State& state) {
  const burgers::ProblemSpec spec(1, 1, -3, -2);
  for (auto _ : state) benchmark::DoNotOptimize(burgers::solve_stationary(spec));
}
BENCHMARK(BM_SolveStationary);

void BM_ModalCurvePoint(benchmark::State& state) {
  const burgers::ProblemSpec spec(1, 1, 1, -1);
  const auto m = burgers::make_modal_solution(spec, 1);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-4;
    if (x > 1.0) x = 0.0;
    benchmark::DoNotOptimize(burgers::eval_modal_solution(m, x, 0.3));
  }
}
BENCHMARK(BM_ModalCurvePoint);

}  // namespace
