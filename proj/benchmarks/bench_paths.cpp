#include <benchmark/benchmark.h>

#include "rainbow/generators.hpp"
#include "rainbow/local_search.hpp"
#include "rainbow/oracle.hpp"

namespace {

void BM_OracleRainbowComplete(benchmark::State& state) {
    const auto g = rainbow::rainbow_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = rainbow::longest_hetero_path(g);
        benchmark::DoNotOptimize(result.nodes);
    }
}
BENCHMARK(BM_OracleRainbowComplete)->DenseRange(8, 12, 2);

void BM_OracleExtremal(benchmark::State& state) {
    const auto g = rainbow::extremal_union(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = rainbow::longest_hetero_path(g);
        benchmark::DoNotOptimize(result.nodes);
    }
}
BENCHMARK(BM_OracleExtremal)->Arg(10)->Arg(13)->Arg(16);

void BM_OracleRandom(benchmark::State& state) {
    const auto g = rainbow::random_colored(static_cast<int>(state.range(0)), 0.6,
                                           static_cast<int>(state.range(1)), 12345);
    for (auto _ : state) {
        auto result = rainbow::longest_hetero_path(g);
        benchmark::DoNotOptimize(result.nodes);
    }
}
BENCHMARK(BM_OracleRandom)->Args({10, 8})->Args({12, 10})->Args({12, 24});

void BM_OracleRandomDominance(benchmark::State& state) {
    const auto g = rainbow::random_colored(static_cast<int>(state.range(0)), 0.6,
                                           static_cast<int>(state.range(1)), 12345);
    rainbow::OracleOptions options;
    options.dominance = true;
    for (auto _ : state) {
        auto result = rainbow::longest_hetero_path(g, options);
        benchmark::DoNotOptimize(result.nodes);
    }
}
BENCHMARK(BM_OracleRandomDominance)->Args({12, 10})->Args({12, 24});

void BM_ExhaustiveRandom(benchmark::State& state) {
    const auto g = rainbow::random_colored(static_cast<int>(state.range(0)), 0.6, 10, 999);
    for (auto _ : state) {
        auto path = rainbow::exhaustive_longest(g);
        benchmark::DoNotOptimize(path.length());
    }
}
BENCHMARK(BM_ExhaustiveRandom)->Arg(7)->Arg(9);

void BM_LocalSearch(benchmark::State& state) {
    const auto g = rainbow::random_colored(static_cast<int>(state.range(0)), 0.6, 14, 4242);
    for (auto _ : state) {
        auto path = rainbow::best_local_search(g);
        benchmark::DoNotOptimize(path.length());
    }
}
BENCHMARK(BM_LocalSearch)->Arg(10)->Arg(14)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
