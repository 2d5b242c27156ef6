#include <benchmark/benchmark.h>

#include <liepoly/discretization.hpp>

using namespace liepoly;

static void BM_GridWithWeights(benchmark::State& state) {
  GroupId g = GroupId::parse("C3");
  for (auto _ : state) {
    auto pts = grid({g, state.range(0)});
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_GridWithWeights)->Arg(6)->Arg(12);

static void BM_GramMatrix(benchmark::State& state) {
  GroupId g = GroupId::parse("B3");
  long long M = state.range(0);
  auto labels = admissible_c_labels(g, M);
  for (auto _ : state) {
    GramReport rep = gram_C(g, M, labels);
    benchmark::DoNotOptimize(rep.max_offdiag);
  }
}
BENCHMARK(BM_GramMatrix)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
