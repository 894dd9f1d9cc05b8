#include <kclique/power.hh>
#include <kclique/solver.hh>

#include <benchmark/benchmark.h>

namespace {

using namespace kclique;

Graph instance(int n, double p)
{
    return generate_gnp(n, p, 20260816);
}

void BM_ColourOrder(benchmark::State & state)
{
    Graph g = instance(int(state.range(0)), 0.5);
    VertexSet p{g.size()};
    p.fill();
    for (auto _ : state)
        benchmark::DoNotOptimize(colour_order(g, p));
}
BENCHMARK(BM_ColourOrder)->Arg(50)->Arg(200)->Arg(800);

void BM_PowerGraph(benchmark::State & state)
{
    Graph g = instance(int(state.range(0)), 0.05);
    for (auto _ : state)
        benchmark::DoNotOptimize(power_graph(g, 2));
}
BENCHMARK(BM_PowerGraph)->Arg(100)->Arg(400)->Arg(1000);

void BM_DominatedSet(benchmark::State & state)
{
    Graph g = instance(int(state.range(0)), 0.3);
    for (auto _ : state) {
        DominationCache cache{g};
        for (int v = 0 ; v < g.size() ; ++v)
            benchmark::DoNotOptimize(cache.dominated_set(v));
    }
}
BENCHMARK(BM_DominatedSet)->Arg(100)->Arg(400);

void BM_SolveMaxClique(benchmark::State & state)
{
    Graph g = instance(int(state.range(0)), 0.5);
    for (auto _ : state) {
        Solution s = solve_max_clique(g);
        benchmark::DoNotOptimize(s);
        state.counters["nodes"] = double(s.stats.nodes);
    }
}
BENCHMARK(BM_SolveMaxClique)->Arg(40)->Arg(70)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SolveMaxKClique(benchmark::State & state)
{
    Graph g = instance(100, 0.1);
    int k = int(state.range(0));
    for (auto _ : state) {
        Solution s = solve_max_k_clique(g, k);
        benchmark::DoNotOptimize(s);
        state.counters["nodes"] = double(s.stats.nodes);
    }
}
BENCHMARK(BM_SolveMaxKClique)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}

BENCHMARK_MAIN();
