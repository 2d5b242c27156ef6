#include <benchmark/benchmark.h>

#include <liepoly/branching.hpp>

using namespace liepoly;

// The degree-14 rank-1 reduction is the largest single identity in the
// catalog tests.
static void BM_ReduceToRankOne(benchmark::State& state) {
  const BranchingRule& rule = find_rule("C3:A1");
  const MultiPoly& p = c_polynomial(rule.parent, {1, 0, 1});
  for (auto _ : state) {
    Reduction red = reduce_polynomial(rule, p);
    benchmark::DoNotOptimize(red.decomposition.terms.size());
  }
}
BENCHMARK(BM_ReduceToRankOne);

static void BM_SubstitutionMap(benchmark::State& state) {
  const BranchingRule& rule = find_rule("B3:A1xA1xA1");
  for (auto _ : state) {
    // branch_orbit is uncached; this measures projection + collection.
    auto counts = branch_orbit(rule, {1, 1, 0});
    benchmark::DoNotOptimize(counts.size());
  }
}
BENCHMARK(BM_SubstitutionMap);

BENCHMARK_MAIN();
