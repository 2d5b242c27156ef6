#include <benchmark/benchmark.h>

#include <liepoly/families.hpp>

using namespace liepoly;

// Product expansion is the workhorse of the polynomial induction and is not
// memoized, so each call does real work.
static void BM_OrbitProduct(benchmark::State& state) {
  GroupId g = GroupId::parse("A3");
  for (auto _ : state) {
    auto prod = orbit_product(g, {1, 0, 0}, {6, 3, 2});
    benchmark::DoNotOptimize(prod.size());
  }
}
BENCHMARK(BM_OrbitProduct);

static void BM_PolyMultiply(benchmark::State& state) {
  GroupId g = GroupId::parse("B3");
  const MultiPoly& a = c_polynomial(g, {2, 2, 2});
  const MultiPoly& b = c_polynomial(g, {1, 1, 2});
  for (auto _ : state) {
    MultiPoly p = a * b;
    benchmark::DoNotOptimize(p.term_count());
  }
}
BENCHMARK(BM_PolyMultiply);

static void BM_WeightPolyEval(benchmark::State& state) {
  GroupId g = GroupId::parse("B3");
  const MultiPoly& S = weight_poly_S(g);
  std::vector<Cplx> u = {{1.3, 0.0}, {-0.7, 0.0}, {2.1, 0.0}};
  for (auto _ : state) benchmark::DoNotOptimize(S.eval(u));
}
BENCHMARK(BM_WeightPolyEval);

BENCHMARK_MAIN();
