#include <benchmark/benchmark.h>

#include "freevertex/colorer.hpp"
#include "freevertex/generators.hpp"
#include "freevertex/nae_solver.hpp"

using namespace freevertex;

static void BM_SolveFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto i = gen::random_nae_instance(n, n - 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nae::solve_free(i));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveFree)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_PropositionFamily(benchmark::State& state) {
  const auto i = gen::proposition_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nae::solve_free(i));
}
BENCHMARK(BM_PropositionFamily)->RangeMultiplier(4)->Range(4, 1024);

static void BM_TwoColor(benchmark::State& state) {
  const auto h = gen::random_regular_uniform(static_cast<std::size_t>(state.range(0)), 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(color::two_color(h));
}
BENCHMARK(BM_TwoColor)->Arg(16)->Arg(40)->Arg(100);

static void BM_SolveFreeVertex(benchmark::State& state) {
  const auto h = gen::random_regular_uniform(static_cast<std::size_t>(state.range(0)), 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(color::solve_free_vertex(h));
}
BENCHMARK(BM_SolveFreeVertex)->Arg(16)->Arg(40)->Arg(100);

// Walk from a coloring that fixes every vertex, so derive_pair and the
// alternating walk are exercised.
static void BM_AllFixedWalk(benchmark::State& state) {
  const auto half = static_cast<std::size_t>(state.range(0));
  const auto inst = gen::random_all_fixed(half, 11, half / 8);
  for (auto _ : state) benchmark::DoNotOptimize(color::free_vertex_from_coloring(inst.hypergraph, inst.coloring));
}
BENCHMARK(BM_AllFixedWalk)->Arg(16)->Arg(64)->Arg(256);

static void BM_LemmaTwoFree(benchmark::State& state) {
  const auto h = gen::random_lemma_instance(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(color::lemma_two_free(h));
}
BENCHMARK(BM_LemmaTwoFree)->Arg(30)->Arg(300)->Arg(3000);
BENCHMARK_MAIN();
