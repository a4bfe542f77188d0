// SPDX-License-Identifier: Apache-2.0
//
// Serial vs OpenMP throughput of the Monte Carlo rate table.

#include <benchmark/benchmark.h>

#include "mmwsim/simlab.hpp"

namespace {

using namespace mmwsim;

SystemConfig desk_config(int trials) {
    SystemConfig cfg;
    cfg.n_r = cfg.n_t = 9;
    cfg.l_r = cfg.l_t = 2;
    cfg.psi = 4;
    cfg.trials = trials;
    cfg.seed = 7;
    return cfg;
}

void BM_rate_table_serial(benchmark::State &state) {
    const SystemConfig cfg = desk_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RateTable t = compute_rate_table(cfg, Selector::fast,
                                         Execution::serial);
        benchmark::DoNotOptimize(t.rates.data());
    }
}

void BM_rate_table_parallel(benchmark::State &state) {
    const SystemConfig cfg = desk_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RateTable t = compute_rate_table(cfg, Selector::fast,
                                         Execution::parallel);
        benchmark::DoNotOptimize(t.rates.data());
    }
}

void BM_loss_ratio_serial(benchmark::State &state) {
    const SystemConfig cfg = desk_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = loss_ratio(cfg, {2, 4}, Execution::serial);
        benchmark::DoNotOptimize(r.data());
    }
}

void BM_loss_ratio_parallel(benchmark::State &state) {
    const SystemConfig cfg = desk_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = loss_ratio(cfg, {2, 4}, Execution::parallel);
        benchmark::DoNotOptimize(r.data());
    }
}

BENCHMARK(BM_rate_table_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rate_table_parallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_loss_ratio_serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_loss_ratio_parallel)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
