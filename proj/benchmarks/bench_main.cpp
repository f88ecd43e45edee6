#include <benchmark/benchmark.h>

#include "daisy/document.hpp"
#include "daisy/verify.hpp"

using namespace daisy;

namespace {

void BM_HammingInterval(benchmark::State& state) {
    Vertex u(8, 0), v(8, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamming_interval(u, v));
    }
}
BENCHMARK(BM_HammingInterval);

void BM_DaisyEnumeration(benchmark::State& state) {
    Shape shape{{2, 2, 2, 2}};
    Vertex zero = shape.zero();
    for (auto _ : state) {
        long long count = 0;
        for_each_daisy_graph(shape, zero, [&](const std::vector<Vertex>&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_DaisyEnumeration);

void BM_IsometryScan(benchmark::State& state) {
    Shape shape{{3, 3, 3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::scan_all_daisy_isometric(shape));
    }
}
BENCHMARK(BM_IsometryScan);

void BM_DeltaClasses(benchmark::State& state) {
    GenericGraph host = full_host(Shape{{3, 3, 3}}).to_generic();
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_classes(host));
    }
}
BENCHMARK(BM_DeltaClasses);

void BM_PseudoMedians(benchmark::State& state) {
    LabeledGraph host = full_host(Shape{{3, 3}});
    GenericGraph g = host.to_generic();
    int u = host.index_of({1, 1});
    int v = host.index_of({2, 2});
    int r = host.index_of({0, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(pseudo_medians(g, u, v, r));
    }
}
BENCHMARK(BM_PseudoMedians);

void BM_DecomposeReplay(benchmark::State& state) {
    DaisyGraph d = daisy_from_vertices(Shape{{2, 2, 3}}, Vertex{0, 0, 0},
                                       enumerate_vertices(Shape{{2, 2, 3}}));
    for (auto _ : state) {
        Decomposition dec = decompose_to_k1(d);
        benchmark::DoNotOptimize(replay(dec));
    }
}
BENCHMARK(BM_DecomposeReplay);

}  // namespace

BENCHMARK_MAIN();
