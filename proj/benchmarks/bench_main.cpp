#include <benchmark/benchmark.h>

#include "npoint/buryak.hpp"
#include "npoint/combinatorics.hpp"
#include "npoint/dvv.hpp"
#include "npoint/numeric.hpp"

namespace {

void BM_p_n_symmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int cap = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(npoint::p_n_symmetric(n, cap));
    }
}
BENCHMARK(BM_p_n_symmetric)->Args({2, 8})->Args({3, 6})->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

void BM_f_bur_series(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int D = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(npoint::f_bur_series(n, D));
    }
}
BENCHMARK(BM_f_bur_series)->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_correlator_fresh_table(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        npoint::CorrelatorTable table;
        benchmark::DoNotOptimize(table.correlator(g, {3 * g - 2}));
    }
}
BENCHMARK(BM_correlator_fresh_table)->Arg(2)->Arg(4)->Arg(6);

void BM_e_okounkov(benchmark::State& state) {
    npoint::NumericConfig cfg;
    cfg.nodes_per_axis = static_cast<int>(state.range(0));
    const std::vector<double> x = {0.5, 0.8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(npoint::e_okounkov(x, cfg));
    }
}
BENCHMARK(BM_e_okounkov)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_f_bur_numeric(benchmark::State& state) {
    npoint::NumericConfig cfg;
    const std::vector<double> x = {0.7, 1.2, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(npoint::f_bur_numeric(x, cfg));
    }
}
BENCHMARK(BM_f_bur_numeric)->Unit(benchmark::kMillisecond);

void BM_cyclic_ordered_partitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(npoint::cyclic_ordered_partitions(n));
    }
}
BENCHMARK(BM_cyclic_ordered_partitions)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
