#pragma once

#include <cstddef>
#include <vector>

#include "trivalent/colorauto.hpp"
#include "trivalent/graph.hpp"
#include "trivalent/perm.hpp"
#include "trivalent/phylo.hpp"

// Exhaustive reference implementations for tests. Every routine carries a
// hard size guard and throws std::invalid_argument beyond it; these are
// definitionally correct, not fast.
namespace trivalent::oracle {

/// All elements of the generated group, by breadth-first closure.
std::vector<Perm> enumerate_group(const std::vector<Perm>& generators,
                                  std::size_t order_guard = 4096);

/// Backtracking isomorphism test; guarded at 10 vertices.
bool brute_iso(const Graph& g1, const Graph& g2);

/// All automorphisms fixing e setwise; guarded at 10 vertices.
std::vector<Perm> brute_aut_e(const Graph& g, Edge e);

/// The element set of C_b(sigma * <generators>) by filtering the
/// enumerated coset through the induced action.
std::vector<Perm> brute_color_aut(const std::vector<Perm>& generators,
                                  const Perm& sigma, const ColoredDomain& dom,
                                  const PointSet& b,
                                  std::size_t order_guard = 4096);

/// Minimal block containing {base, omega}, computed independently by
/// subset enumeration and by the orbit-graph component; the two must
/// agree or a logic error is raised. Guarded at degree 12.
PointSet brute_smallest_block(const std::vector<Perm>& generators,
                              int base_point, int omega);

/// Exhaustive rooted-tree isomorphism by trying all children matchings.
bool brute_phylo_isomorphic(const PhyloTree& t1, const PhyloTree& t2);

/// All connected graphs with maximum degree 3 on n vertices, one per
/// isomorphism class, built by vertex extension and deduplicated with
/// brute_iso. Guarded at 8 vertices.
std::vector<Graph> connected_max3_graphs(int n);

}  // namespace trivalent::oracle
