#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "cssg/ged.hpp"
#include "cssg/semgraph.hpp"

namespace {

using namespace cssg;

const char* const kProblems[] = {"p05_fibonacci", "p08_gcd", "p14_sort", "p24_leap_year"};

std::pair<SemanticGraph, SemanticGraph> pair_for(int index, const char* ext) {
    const std::string problem = kProblems[index];
    return {build_semantic_graph(bench::desk(problem, std::string("correct_1") + ext)),
            build_semantic_graph(bench::desk(problem, std::string("correct_2") + ext))};
}

void BM_GedExact(benchmark::State& state) {
    const auto [a, b] = pair_for(static_cast<int>(state.range(0)), ".py");
    for (auto _ : state) benchmark::DoNotOptimize(ged_exact(a, b).total_cost);
    state.counters["nodes"] = static_cast<double>(a.nodes.size() + b.nodes.size());
}
BENCHMARK(BM_GedExact)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_GedApprox(benchmark::State& state) {
    const auto [a, b] = pair_for(static_cast<int>(state.range(0)), ".java");
    for (auto _ : state) benchmark::DoNotOptimize(ged_approx(a, b).total_cost);
    state.counters["nodes"] = static_cast<double>(a.nodes.size() + b.nodes.size());
}
BENCHMARK(BM_GedApprox)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

} // namespace
