#include <iop/exact.hh>
#include <iop/reductions.hh>

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

using iop::Graph;

Graph petersen_line_graph()
{
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    return iop::line_graph(petersen).graph;
}

Graph complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return Graph(n, edges);
}

void decide_serial(benchmark::State & state, const Graph & g, int k)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(iop::decide_width_serial(g, k));
}

void decide_parallel(benchmark::State & state, const Graph & g, int k)
{
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(iop::decide_width_parallel(g, k, iop::default_budget, workers));
}

void gadget(benchmark::State & state)
{
    const auto & g = iop::shipped_gadget();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(iop::verify_gadget(g.graph, g.terminals, workers));
}

const Graph line_petersen = petersen_line_graph();
const Graph k7 = complete(7);

}  // namespace

BENCHMARK_CAPTURE(decide_serial, petersen_line_k2, line_petersen, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decide_parallel, petersen_line_k2, line_petersen, 2)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decide_serial, k7_k5, k7, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decide_parallel, k7_k5, k7, 5)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(gadget)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
