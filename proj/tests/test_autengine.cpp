#include <doctest.h>

#include <set>

#include "support.hpp"
#include "trivalent/autengine.hpp"
#include "trivalent/oracle.hpp"

using namespace trivalent;
using testsupport::from1;
using testsupport::to_set;

namespace {

Graph graph1b(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.first - 1, e.second - 1);
  return g;
}

const Graph kStar = graph1b(4, {{1, 2}, {1, 3}, {1, 4}});
const Graph kDoubleStar =
    graph1b(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});

std::set<Perm> generated_set(const std::vector<Perm>& gens, int degree) {
  if (gens.empty()) return {Perm(degree)};
  return to_set(oracle::enumerate_group(gens));
}

}  // namespace

TEST_CASE("kernel_generators") {
  SUBCASE("star twins") {
    const LayeredGraph lg = layer_sequence(kStar, {0, 1});
    CHECK(kernel_generators(lg, 1) ==
          std::vector<Perm>{parse_cycles("(3 4)", 4)});
  }
  SUBCASE("triangle merge: subdivision endpoints are twins, the far level is not") {
    const Graph triangle = graph1b(3, {{1, 2}, {2, 3}, {1, 3}});
    const MergedInstance m = build_x(triangle, {0, 1}, triangle, {0, 1});
    const LayeredGraph lg = layer_sequence(m);
    CHECK(kernel_generators(lg, 1).size() == 2);
    CHECK(kernel_generators(lg, 2).empty());  // neighbor sets {0,1} vs {3,4}
  }
  SUBCASE("two twin pairs") {
    const LayeredGraph lg = layer_sequence(kDoubleStar, {0, 1});
    CHECK(kernel_generators(lg, 1) ==
          std::vector<Perm>{parse_cycles("(3 4)", 6), parse_cycles("(5 6)", 6)});
  }
}

TEST_CASE("level_domain") {
  SUBCASE("star: single twin father, nothing else") {
    const LayeredGraph lg = layer_sequence(kStar, {0, 1});
    const LevelDomain dom =
        level_domain(lg, 1, {transposition(4, 0, 1)});
    CHECK(dom.a_two == std::vector<PointSet>{from1({1})});
    CHECK(dom.a_one.empty());
    CHECK(dom.a_prime.empty());
    // closure under (1 2) adds the unflagged image {2}
    CHECK(dom.domain.index_of(from1({2})) >= 0);
    CHECK(dom.domain.color(dom.domain.index_of(from1({1}))) !=
          dom.domain.color(dom.domain.index_of(from1({2}))));
  }
  SUBCASE("twin square: the shared father is not a new edge") {
    const Graph g = graph1b(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    const LayeredGraph lg = layer_sequence(g, {0, 1});
    const LevelDomain dom =
        level_domain(lg, 1, {transposition(4, 0, 1)});
    CHECK(dom.a_two == std::vector<PointSet>{from1({1, 2})});
    CHECK(dom.a_prime.empty());
    CHECK(dom.a_one.empty());
  }
  SUBCASE("pure-edge transition carries only new edges") {
    // the 4-cycle from e: the far edge joins two level-2 vertices
    const Graph square = graph1b(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const LayeredGraph lg = layer_sequence(square, {0, 1});
    REQUIRE(lg.levels() == 3);
    const LevelDomain dom = level_domain(lg, 2, {});
    CHECK(dom.a_prime == std::vector<PointSet>{from1({3, 4})});
    CHECK(dom.a_one.empty());
    CHECK(dom.a_two.empty());
    CHECK(kernel_generators(lg, 2).empty());
  }
}

TEST_CASE("image_generators") {
  SUBCASE("star: the edge swap does not survive") {
    const LayeredGraph lg = layer_sequence(kStar, {0, 1});
    const std::vector<Perm> level_group{transposition(4, 0, 1)};
    const LevelDomain dom = level_domain(lg, 1, level_group);
    CHECK(generated_set(image_generators(level_group, dom), 4) ==
          std::set<Perm>{Perm(4)});
  }
  SUBCASE("double star: the swap is color-preserving") {
    const LayeredGraph lg = layer_sequence(kDoubleStar, {0, 1});
    const std::vector<Perm> level_group{transposition(6, 0, 1)};
    const LevelDomain dom = level_domain(lg, 1, level_group);
    CHECK(generated_set(image_generators(level_group, dom), 6) ==
          generated_set(level_group, 6));
  }
  SUBCASE("trivial group stays trivial") {
    const LayeredGraph lg = layer_sequence(kDoubleStar, {0, 1});
    const LevelDomain dom = level_domain(lg, 1, {});
    CHECK(image_generators({}, dom).empty());
  }
}

TEST_CASE("pullback") {
  const LayeredGraph lg = layer_sequence(kDoubleStar, {0, 1});
  SUBCASE("identity extends to the identity") {
    CHECK(pullback(Perm(6), lg, 1) == Perm(6));
  }
  SUBCASE("the side swap maps twin pairs in ascending order") {
    const Perm extended = pullback(transposition(6, 0, 1), lg, 1);
    CHECK(extended == parse_cycles("(1 2)(3 5)(4 6)", 6));
  }
  SUBCASE("a non-preserving permutation has no extension") {
    const Graph g = graph1b(4, {{1, 2}, {1, 3}, {2, 4}});  // path pair
    const LayeredGraph path = layer_sequence(g, {0, 1});
    // swapping only vertex 1 and 2 sends father {1} to {2}; both exist, fine;
    // but a permutation moving 1 onto an uncovered vertex must throw
    const Perm bad = parse_cycles("(1 3)", 4);
    CHECK_THROWS_AS(pullback(bad, path, 1), std::invalid_argument);
  }
}

TEST_CASE("aut_e on the named fixtures") {
  SUBCASE("star graph") {
    const AutEResult r = aut_e(kStar, {0, 1});
    CHECK(generated_set(r.generators, 4) ==
          std::set<Perm>{Perm(4), parse_cycles("(3 4)", 4)});
  }
  SUBCASE("six-vertex path around the middle edge") {
    const Graph path = graph1b(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    const AutEResult r = aut_e(path, {2, 3});
    const auto expected = to_set(oracle::brute_aut_e(path, {2, 3}));
    CHECK(generated_set(r.generators, 6) == expected);
    CHECK(expected.size() == 2);
  }
  SUBCASE("merge of two single edges") {
    const Graph k2 = graph1b(2, {{1, 2}});
    const MergedInstance m = build_x(k2, {0, 1}, k2, {0, 1});
    const AutEResult r = aut_e(m);
    CHECK(generated_set(r.generators, 6) ==
          to_set(oracle::brute_aut_e(m.graph, m.e)));
  }
  SUBCASE("asymmetric instance") {
    const Graph g = graph1b(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}});
    const AutEResult r = aut_e(g, {0, 1});
    CHECK(generated_set(r.generators, 6) == std::set<Perm>{Perm(6)});
  }
  SUBCASE("disconnected or high-degree inputs are rejected") {
    CHECK_THROWS_AS(aut_e(graph1b(4, {{1, 2}, {3, 4}}), {0, 1}),
                    std::invalid_argument);
  }
}

TEST_CASE("aut_e agrees with the brute oracle over the small corpus") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : oracle::connected_max3_graphs(n)) {
      for (const Edge& e : g.edges()) {
        const AutEResult r = aut_e(g, e);
        const auto expected = to_set(oracle::brute_aut_e(g, e));
        CHECK(generated_set(r.generators, n) == expected);
        for (const Perm& gen : r.generators) {
          // every generator is an automorphism fixing e setwise
          for (const Edge& edge : g.edges())
            CHECK(g.has_edge(gen(edge.first), gen(edge.second)));
          const bool fixes =
              (gen(e.first) == e.first && gen(e.second) == e.second) ||
              (gen(e.first) == e.second && gen(e.second) == e.first);
          CHECK(fixes);
        }
      }
    }
  }
}

TEST_CASE("all coset-recursion modes drive the pipeline to the same group") {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : oracle::connected_max3_graphs(n)) {
      for (const Edge& e : g.edges()) {
        const auto expected = to_set(oracle::brute_aut_e(g, e));
        for (const CbOptions cb :
             {CbOptions{.generators_are_sgs = true, .use_structure_tree = false},
              CbOptions{.generators_are_sgs = false, .use_structure_tree = false},
              CbOptions{.generators_are_sgs = true, .use_structure_tree = true}}) {
          AutEOptions opts;
          opts.cb = cb;
          const AutEResult r = aut_e(g, e, opts);
          CHECK(generated_set(r.generators, n) == expected);
        }
      }
    }
  }
}

TEST_CASE("every level group is a 2-group") {
  Rng rng(1812);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 8 + 2 * rng.uniform(5);
    const Graph g1 = random_cubic_graph(n, rng);
    const Graph g2 = relabel(g1, random_perm(n, rng));
    const MergedInstance m = build_x(g1, g1.edges().front(), g2,
                                     g2.edges()[rng.uniform(g2.edge_count())]);
    AutEOptions opts;
    opts.keep_level_generators = true;
    const AutEResult r = aut_e(m, opts);
    for (const auto& level : r.level_generators) {
      SiftChain chain = close_generators(level, m.graph.vertex_count());
      CHECK(chain.order_pow2_exponent() >= 0);
    }
  }
}

TEST_CASE("the early probe prunes and witnesses") {
  const Graph path = graph1b(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  SUBCASE("witness on a symmetric instance") {
    AutEOptions opts;
    opts.early_swap_probe = Edge{2, 3};
    const AutEResult r = aut_e(path, {2, 3}, opts);
    REQUIRE(r.witness.has_value());
    CHECK((*r.witness)(2) == 3);
    CHECK((*r.witness)(3) == 2);
    CHECK_FALSE(r.aborted);
  }
  SUBCASE("abort on an asymmetric instance") {
    const Graph g = graph1b(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}});
    AutEOptions opts;
    opts.early_swap_probe = Edge{0, 1};
    const AutEResult r = aut_e(g, {0, 1}, opts);
    CHECK(r.aborted);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("second-level edge bound") {
  Rng rng(4096);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_cubic_graph(8 + 2 * rng.uniform(4), rng);
    const Edge e = g.edges().front();
    const LayeredGraph lg = layer_sequence(g, e);
    if (lg.levels() < 2) continue;
    int edges_x2 = 1;  // e itself
    for (const Edge& edge : g.edges()) {
      if (edge == Edge{std::min(e.first, e.second), std::max(e.first, e.second)})
        continue;
      if (std::min(lg.distance[edge.first], lg.distance[edge.second]) <= 0)
        ++edges_x2;
    }
    CHECK(edges_x2 < static_cast<int>(lg.vertices[1].size()) * 3);
  }
}
