#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "primspec/prim_space.hpp"
#include "primspec/subsets.hpp"
#include "primspec/tails.hpp"
#include "primspec/topology.hpp"

namespace {

using primspec::Cardinality;
using primspec::Graph;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> pick(0, 2);
  const Cardinality palette[] = {Cardinality{1}, Cardinality{2}, Cardinality::omega()};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<primspec::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng)) edges.push_back({names[i], names[j], palette[pick(rng)]});
  return Graph(names, edges);
}

void BM_EnumerateHs(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 2.0 / state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(primspec::enumerate_hs(g));
}
BENCHMARK(BM_EnumerateHs)->Arg(8)->Arg(12)->Arg(16);

void BM_MaximalTails(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 2.0 / state.range(0), 11);
  for (auto _ : state) benchmark::DoNotOptimize(primspec::maximal_tails(g));
}
BENCHMARK(BM_MaximalTails)->Arg(16)->Arg(64)->Arg(256);

void BM_PrimSpace(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 2.0 / state.range(0), 13);
  for (auto _ : state) benchmark::DoNotOptimize(primspec::PrimSpace(g));
}
BENCHMARK(BM_PrimSpace)->Arg(16)->Arg(64);

void BM_Closure(benchmark::State& state) {
  const primspec::PrimSpace space(
      random_graph(static_cast<int>(state.range(0)), 2.0 / state.range(0), 17));
  primspec::PrimSubset s;
  for (std::size_t i : space.gamma_indices())
    if (i % 3 == 0) s.gamma.push_back(space.tails()[i].tail.vertices);
  for (std::size_t i : space.tau_indices())
    if (i % 2 == 0)
      s.circle[space.tails()[i].tail.vertices] = primspec::CircleSet::parse("arc:(0,1/2)");
  s.normalize();
  for (auto _ : state) benchmark::DoNotOptimize(primspec::closure(space, s));
}
BENCHMARK(BM_Closure)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
