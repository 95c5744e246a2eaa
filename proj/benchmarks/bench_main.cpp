#include <benchmark/benchmark.h>

#include "heatsmc/heat_sim.hpp"
#include "heatsmc/reduced_ode.hpp"
#include "heatsmc/spectral.hpp"

using namespace heatsmc;

static void BM_SolveEigenvalue(benchmark::State& state) {
  const int branch = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_eigenvalue(0.5, branch));
  }
}
BENCHMARK(BM_SolveEigenvalue)->Arg(0)->Arg(1)->Arg(5);

static void BM_PdeStep(benchmark::State& state) {
  SimConfig cfg;
  cfg.grid = Grid{static_cast<int>(state.range(0))};
  cfg.dt = 0.4 * cfg.grid.dx() * cfg.grid.dx();
  FieldState field = build_initial_state(cfg);
  for (auto _ : state) {
    field = step(field, 0.0, 0.0, cfg);
    benchmark::DoNotOptimize(field.values.data());
  }
}
BENCHMARK(BM_PdeStep)->Arg(11)->Arg(41)->Arg(161);

static void BM_SimulateSmc(benchmark::State& state) {
  SimConfig cfg;
  cfg.horizon = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(cfg));
  }
}
BENCHMARK(BM_SimulateSmc);

static void BM_ReducedSmc(benchmark::State& state) {
  const auto pair = solve_eigenvalue(0.5, 1);
  const auto d = DisturbanceSpec::sinusoid(2.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_smc_reduced(1.0, SmcGains{2.5}, pair.b_star_phi, d, 1e-5,
                                                  1.0));
  }
}
BENCHMARK(BM_ReducedSmc);

static void BM_ReducedSt(benchmark::State& state) {
  const auto pair = solve_eigenvalue(0.5, 1);
  const auto d = DisturbanceSpec::sinusoid(2.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_st_reduced(1.0, 0.0, StGains{2.2, 2.5}, pair.b_star_phi, d,
                                                 1e-5, 1.0));
  }
}
BENCHMARK(BM_ReducedSt);

BENCHMARK_MAIN();
