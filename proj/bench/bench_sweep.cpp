#include <benchmark/benchmark.h>

#include "eqr/simulator.hpp"
#include "eqr/sweep.hpp"

namespace {

const eqr::Scenario& scenario() {
  static const eqr::Scenario s = [] {
    eqr::SimConfig cfg;
    cfg.t_f = 5.0;
    return eqr::build_scenario(cfg);
  }();
  return s;
}

void BM_SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqr::sweep_serial(scenario(), eqr::InitialCondition{}, n, n));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_SweepParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqr::sweep(scenario(), eqr::InitialCondition{}, n, n));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_BuildScenario(benchmark::State& state) {
  eqr::SimConfig cfg;
  cfg.t_f = 5.0;
  for (auto _ : state) benchmark::DoNotOptimize(eqr::build_scenario(cfg));
}

void BM_SingleRun(benchmark::State& state) {
  eqr::InitialCondition ic;
  ic.bearing = eqr::InitialCondition::Bearing{2.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eqr::integrate_closed_loop(scenario(), eqr::Controller::Eqr, ic, false));
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildScenario)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleRun)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
