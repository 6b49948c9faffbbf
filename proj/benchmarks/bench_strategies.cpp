// Microbenchmarks for the three ways of computing the polynomial lattice:
// nearest-neighbor recurrence, closed-form multiple sum, and generating
// function coefficient extraction.

#include "mcharlier/charlier.hpp"
#include "mcharlier/series.hpp"

#include <benchmark/benchmark.h>

using namespace mcharlier;

namespace {

CharlierParams bench_params() {
    return CharlierParams(2, {parse_rational("1/2"), parse_rational("3/2")});
}

void BM_recurrence(benchmark::State& state) {
    const auto params = bench_params();
    const int nmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = build_table(params, nmax);
        benchmark::DoNotOptimize(table);
    }
}

void BM_explicit(benchmark::State& state) {
    const auto params = bench_params();
    const int nmax = static_cast<int>(state.range(0));
    const auto lattice = indices_up_to(params.r, nmax);
    for (auto _ : state) {
        for (const auto& n : lattice) {
            auto p = eval_explicit(n, params);
            benchmark::DoNotOptimize(p);
        }
    }
}

void BM_genfunc(benchmark::State& state) {
    const auto params = bench_params();
    const int nmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // One series per spectral point; evaluating the lattice at k = 0..nmax.
        for (int k = 0; k <= nmax; ++k) {
            auto g = gen_lhs(k, params, nmax);
            benchmark::DoNotOptimize(g);
        }
    }
}

} // namespace

BENCHMARK(BM_recurrence)->DenseRange(2, 8, 2);
BENCHMARK(BM_explicit)->DenseRange(2, 8, 2);
BENCHMARK(BM_genfunc)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
