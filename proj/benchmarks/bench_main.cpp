#include <benchmark/benchmark.h>

#include <random>

#include "enumbers/canonical.hpp"
#include "enumbers/constructions.hpp"
#include "enumbers/feasibility.hpp"
#include "enumbers/graph.hpp"
#include "enumbers/oracle.hpp"

using namespace enumbers;

namespace {

Graph random_triangle_free(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int attempt = 0; attempt < n * n; ++attempt) {
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    if (a != b && (g.neighbors(a) & g.neighbors(b)).empty()) g.add_edge(a, b);
  }
  return g;
}

void BM_IndependenceNumber(benchmark::State& state) {
  const Graph g = random_triangle_free(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(20)->Arg(40)->Arg(64)->Arg(100);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? twisted_tesseract() : random_triangle_free(30, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_EnumerateFeasible(benchmark::State& state) {
  const auto& table = BoundsTable::embedded();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_feasible(11, 41, 138, table));
}
BENCHMARK(BM_EnumerateFeasible);

void BM_RaiseLowerBound(benchmark::State& state) {
  const auto& table = BoundsTable::embedded();
  for (auto _ : state) benchmark::DoNotOptimize(raise_lower_bound(7, 23, table));
}
BENCHMARK(BM_RaiseLowerBound);

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_edges_exhaustive(5, n));
}
BENCHMARK(BM_Oracle)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
