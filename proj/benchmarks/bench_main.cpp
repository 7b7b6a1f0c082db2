#include <benchmark/benchmark.h>

#include "trivalent/autengine.hpp"
#include "trivalent/iso.hpp"
#include "trivalent/phylo.hpp"
#include "trivalent/random_graphs.hpp"
#include "trivalent/sift_chain.hpp"

using namespace trivalent;

namespace {

void BM_SiftClose(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  Rng rng(17);
  std::vector<Perm> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(random_perm(degree, rng));
  for (auto _ : state) {
    SiftChain chain = close_generators(gens, degree);
    benchmark::DoNotOptimize(chain.order_pow2_exponent());
  }
}
BENCHMARK(BM_SiftClose)->Arg(8)->Arg(12)->Arg(16);

void BM_AutE(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(23);
  const Graph g1 = random_cubic_graph(n, rng);
  const Graph g2 = relabel(g1, random_perm(n, rng));
  const MergedInstance m = build_x(g1, g1.edges().front(), g2, g2.edges().front());
  for (auto _ : state) {
    const AutEResult r = aut_e(m);
    benchmark::DoNotOptimize(r.generators.size());
  }
}
BENCHMARK(BM_AutE)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_IsomorphicPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(29);
  const Graph g1 = random_cubic_graph(n, rng);
  const Graph g2 = relabel(g1, random_perm(n, rng));
  for (auto _ : state) {
    const IsoResult r = isomorphic(g1, g2);
    benchmark::DoNotOptimize(r.isomorphic);
  }
}
BENCHMARK(BM_IsomorphicPair)
    ->Arg(32)
    ->Arg(64)
    ->Arg(128)
    ->Unit(benchmark::kMillisecond);

void BM_RandomPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(31);
  const Graph g1 = random_cubic_graph(n, rng);
  const Graph g2 = random_cubic_graph(n, rng);
  for (auto _ : state) {
    const IsoResult r = isomorphic(g1, g2);
    benchmark::DoNotOptimize(r.isomorphic);
  }
}
BENCHMARK(BM_RandomPair)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_PhyloIsomorphic(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  Rng rng(37);
  PhyloTree t;
  t.root = 0;
  t.parent.assign(nodes, -1);
  t.children.assign(nodes, {});
  for (int v = 1; v < nodes; ++v) {
    const int p = rng.uniform(v);
    t.parent[v] = p;
    t.children[p].push_back(v);
  }
  int taxon = 0;
  for (int v = 0; v < nodes; ++v)
    if (t.children[v].empty())
      t.leaf_of_taxon["t" + std::to_string(taxon++)] = v;
  for (auto _ : state) {
    const auto phi = phylo_isomorphic(t, t);
    benchmark::DoNotOptimize(phi.has_value());
  }
}
BENCHMARK(BM_PhyloIsomorphic)->Arg(1000)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
