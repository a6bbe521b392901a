#include <benchmark/benchmark.h>

#include "dwlab/estimators.hpp"
#include "dwlab/model.hpp"
#include "dwlab/montecarlo.hpp"

namespace {

dwlab::ModelParams params() {
    dwlab::ModelParams p;
    p.theta = 0.5;
    p.rho = 0.3;
    return p;
}

void BM_Simulate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwlab::simulate(params(), {}, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_Estimate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const dwlab::Path path = dwlab::simulate(params(), {}, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwlab::estimate(path));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Estimate)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_RunningEstimates(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const dwlab::Path path = dwlab::simulate(params(), {}, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwlab::running_estimates(path.x(), 100));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunningEstimates)->Arg(100000)->Arg(1000000);

void BM_Replications(benchmark::State& state) {
    dwlab::McConfig cfg;
    cfg.params = params();
    cfg.n = 5000;
    cfg.replicates = static_cast<std::size_t>(state.range(0));
    cfg.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwlab::run_replications(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Replications)->Args({200, 1})->Args({200, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
