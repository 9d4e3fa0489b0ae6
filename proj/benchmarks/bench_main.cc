#include <benchmark/benchmark.h>

#include "netsimp/generators.hpp"
#include "netsimp/netprops.hpp"
#include "netsimp/similarity.hpp"
#include "netsimp/simplify.hpp"

using namespace netsimp;

namespace {

Graph bench_graph(std::int64_t n) {
    return preferential_attachment_graph(static_cast<std::uint32_t>(n), 3, 12345);
}

void BM_BetweennessExact(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    BetweennessOptions options;
    options.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(betweenness(g, options));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BetweennessExact)->Range(256, 2048)->Complexity()->Unit(benchmark::kMillisecond);

void BM_BetweennessPivots(benchmark::State& state) {
    Graph g = bench_graph(8192);
    BetweennessOptions options;
    options.threads = 1;
    options.pivots = static_cast<std::uint32_t>(state.range(0));
    options.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(betweenness(g, options));
}
BENCHMARK(BM_BetweennessPivots)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_SampleDegreeBiased(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    SampleSpec spec;
    spec.method = Method::RD;
    spec.s = 0.1;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        spec.seed = ++seed;
        benchmark::DoNotOptimize(sample_rd(g, spec));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleDegreeBiased)->Range(1024, 16384)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ClusterGrowing(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    MergeSpec spec;
    spec.method = Method::CG;
    spec.box_radius = 2;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        spec.seed = ++seed;
        benchmark::DoNotOptimize(merge_cg(g, spec));
    }
}
BENCHMARK(BM_ClusterGrowing)->Range(1024, 16384)->Unit(benchmark::kMillisecond);

void BM_LabelPropagation(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(detect_communities(g, ++seed));
}
BENCHMARK(BM_LabelPropagation)->Range(1024, 16384)->Unit(benchmark::kMillisecond);

void BM_KsDistance(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    auto a = degree_distribution(g, DegreeMode::Total);
    auto b = local_clustering(g);
    for (auto _ : state) benchmark::DoNotOptimize(ks_d(a, b));
}
BENCHMARK(BM_KsDistance)->Range(1024, 65536);

}  // namespace

BENCHMARK_MAIN();
