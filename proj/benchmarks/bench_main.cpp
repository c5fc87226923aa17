#include <benchmark/benchmark.h>

#include "kempe/generate.hpp"
#include "kempe/kempe_walk.hpp"
#include "kempe/rng.hpp"
#include "kempe/solver.hpp"

namespace {

using namespace kempe;

void BM_InitialConfiguration(benchmark::State& state) {
    const SimpleGraph g = random_regular_graph(static_cast<int>(state.range(0)), 4, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Configuration config = initial_configuration(g, 4, seed++);
        benchmark::DoNotOptimize(config.variable_count());
    }
}
BENCHMARK(BM_InitialConfiguration)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_TraceMaxPath(benchmark::State& state) {
    const SimpleGraph g = random_regular_graph(static_cast<int>(state.range(0)), 4, 1);
    const Configuration config = initial_configuration(g, 4, 7);
    for (auto _ : state) {
        for (EdgeId e = 0; e < g.edge_count(); e += 17) {
            const auto [lo, hi] = g.endpoints(e);
            const ComplexColor cc = config.edge_colors(e);
            const Color other = cc.first == 1 ? 2 : 1;
            benchmark::DoNotOptimize(trace_max_path(config, Link{e, lo}, cc.first, other).links.size());
        }
    }
}
BENCHMARK(BM_TraceMaxPath)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Wkp(benchmark::State& state) {
    const SimpleGraph g = random_regular_graph(static_cast<int>(state.range(0)), 4, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Configuration config = initial_configuration(g, 4, seed++);
        wkp(config);
        benchmark::DoNotOptimize(config.variable_count());
    }
}
BENCHMARK(BM_Wkp)->Arg(100)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_WstPipeline(benchmark::State& state) {
    const SimpleGraph g = random_regular_graph(static_cast<int>(state.range(0)), 4, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wst(g, false, seed++).verdict);
    }
}
BENCHMARK(BM_WstPipeline)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_RegularGeneration(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_regular_graph(static_cast<int>(state.range(0)), 8, seed++).edge_count());
    }
}
BENCHMARK(BM_RegularGeneration)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
