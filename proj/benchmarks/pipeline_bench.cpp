#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "cssg/metrics.hpp"
#include "cssg/semgraph.hpp"

namespace {

using namespace cssg;

void BM_BuildGraph(benchmark::State& state) {
    const auto unit = bench::desk("p14_sort", "correct_2.java");
    for (auto _ : state) benchmark::DoNotOptimize(build_semantic_graph(unit).nodes.size());
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMicrosecond);

void BM_ScorePair(benchmark::State& state) {
    const auto metric = kAllMetrics[static_cast<std::size_t>(state.range(0))];
    const auto a = bench::desk("p14_sort", "correct_1.py");
    const auto b = bench::desk("p14_sort", "incorrect_1.py");
    for (auto _ : state) benchmark::DoNotOptimize(score_pair(metric, a, b).score);
    state.SetLabel(std::string(to_string(metric)));
}
BENCHMARK(BM_ScorePair)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
