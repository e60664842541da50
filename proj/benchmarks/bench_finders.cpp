#include <benchmark/benchmark.h>

#include "cominor/digraph_finder.hpp"
#include "cominor/generators.hpp"
#include "cominor/minor_finder.hpp"
#include "cominor/oracle.hpp"
#include "cominor/schemes.hpp"

using namespace cominor;

static void BM_ApexMinorSnake(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto scheme = make_snake_scheme(gen_snake(6), 0, 1);
  const Graph g = gen_min_degree_graph(n, 6, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_apex_minor(g, *scheme));
}
BENCHMARK(BM_ApexMinorSnake)->Arg(20)->Arg(40)->Arg(80);

static void BM_ApexButterfly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph t = gen_inarborescence(4, 3);
  const Digraph d = gen_min_outdegree_digraph(n, 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_apex_inarb_butterfly(d, t));
}
BENCHMARK(BM_ApexButterfly)->Arg(20)->Arg(40)->Arg(80);

static void BM_Wheel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = gen_min_outdegree_digraph(n, 4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_wheel_subdivision(d, 4));
}
BENCHMARK(BM_Wheel)->Arg(20)->Arg(40)->Arg(80);

static void BM_OracleIcosahedronK5(benchmark::State& state) {
  const Graph g = gen_icosahedron();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_minor(g, Graph::complete(5)));
}
BENCHMARK(BM_OracleIcosahedronK5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
