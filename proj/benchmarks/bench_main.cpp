#include <benchmark/benchmark.h>

#include "sympow/sympow.hpp"

using namespace sympow;

static void BM_MinimalCovers(benchmark::State& state) {
  Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vertex_covers(g));
}
BENCHMARK(BM_MinimalCovers)->Arg(9)->Arg(13)->Arg(17)->Arg(21);

static void BM_MaxEdgeCountCycle(benchmark::State& state) {
  Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  std::vector<std::int64_t> exps(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) exps[i] = 1 + i % 4;
  Monomial m(exps);
  for (auto _ : state) benchmark::DoNotOptimize(max_edge_count(g, m));
}
BENCHMARK(BM_MaxEdgeCountCycle)->Arg(11)->Arg(51)->Arg(111);

static void BM_MaxEdgeCountBranchAndBound(benchmark::State& state) {
  Graph g = Graph::complete(static_cast<int>(state.range(0)));
  std::vector<std::int64_t> exps(g.num_vertices(), 2);
  Monomial m(exps);
  for (auto _ : state) benchmark::DoNotOptimize(max_edge_count(g, m));
}
BENCHMARK(BM_MaxEdgeCountBranchAndBound)->Arg(4)->Arg(5)->Arg(6);

static void BM_SymbolicGenerators(benchmark::State& state) {
  EdgeIdeal ideal(Graph::cycle(5));
  const std::int64_t t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_minimal_generators(ideal, t));
}
BENCHMARK(BM_SymbolicGenerators)->Arg(4)->Arg(8)->Arg(12);

static void BM_AlphaSubprogramLp(benchmark::State& state) {
  Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  LinearProgram p = alpha_subprogram(g, 5);
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(p));
}
BENCHMARK(BM_AlphaSubprogramLp)->Arg(5)->Arg(9)->Arg(13);

static void BM_SdefectBrute(benchmark::State& state) {
  EdgeIdeal ideal(Graph::cycle(5));
  const std::int64_t t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sdefect_bruteforce(ideal, t));
}
BENCHMARK(BM_SdefectBrute)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
