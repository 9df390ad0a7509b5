// Serial reference vs. parallel kernel on the same inputs.

#include <benchmark/benchmark.h>

#include "sumod/catalog.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/ksum.hpp"
#include "sumod/matroid.hpp"
#include "sumod/unimodularity.hpp"

using namespace sumod;

namespace {

// TU input that needs the full scan: network matrix of a wheel with a path tree.
IntMatrix wheel(std::size_t k) { return network_matrix(wheel_graph(k), wheel_path_tree(k)); }

const OracleCaps kCaps{12, 16};

void BM_IsTuReference(benchmark::State& state) {
    IntMatrix m = wheel(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::is_tu(m, kCaps));
}

void BM_IsTuKernel(benchmark::State& state) {
    IntMatrix m = wheel(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_tu(m, kCaps));
}

void BM_IsSuReference(benchmark::State& state) {
    IntMatrix m = network_matrix(wheel_graph(static_cast<std::size_t>(state.range(0))),
                                 wheel_star_tree(static_cast<std::size_t>(state.range(0))));
    m = one_sum(m, classic_matrix(Classic::N1));
    for (auto _ : state) benchmark::DoNotOptimize(reference::is_su(m, kCaps));
}

void BM_IsSuKernel(benchmark::State& state) {
    IntMatrix m = network_matrix(wheel_graph(static_cast<std::size_t>(state.range(0))),
                                 wheel_star_tree(static_cast<std::size_t>(state.range(0))));
    m = one_sum(m, classic_matrix(Classic::N1));
    for (auto _ : state) benchmark::DoNotOptimize(is_su(m, kCaps));
}

void BM_SeparationsReference(benchmark::State& state) {
    IntMatrix m = one_sum(wheel(static_cast<std::size_t>(state.range(0))), classic_matrix(Classic::N2));
    for (auto _ : state) benchmark::DoNotOptimize(reference::separations_of_order(m, 2));
}

void BM_SeparationsKernel(benchmark::State& state) {
    IntMatrix m = one_sum(wheel(static_cast<std::size_t>(state.range(0))), classic_matrix(Classic::N2));
    for (auto _ : state) benchmark::DoNotOptimize(separations_of_order(m, 2));
}

}  // namespace

BENCHMARK(BM_IsTuReference)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsTuKernel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsSuReference)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsSuKernel)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparationsReference)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparationsKernel)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
