#include <benchmark/benchmark.h>

#include <liepoly/orbit.hpp>

using namespace liepoly;

#include <liepoly/discretization.hpp>

// The raw 48-point closure, exercised through the uncached torus-orbit path
// (the plain orbit builder memoizes by seed).
static void BM_TorusOrbitSize(benchmark::State& state) {
  GroupId g = GroupId::parse("B3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_weight(g, 7, {1, 1, 1}));
  }
}
BENCHMARK(BM_TorusOrbitSize);

static void BM_DominantRepresentative(benchmark::State& state) {
  GroupId g = GroupId::parse("C3");
  Weight w{-3, 5, -7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dominant_representative(g, w).weight[0]);
  }
}
BENCHMARK(BM_DominantRepresentative);

BENCHMARK_MAIN();
