#pragma once

#include <optional>
#include <vector>

#include "trivalent/colorauto.hpp"
#include "trivalent/graph.hpp"

namespace trivalent {

struct IsoResult {
  bool isomorphic = false;
  std::optional<std::vector<int>> mapping;  // vertex of g1 -> vertex of g2
};

struct IsoOptions {
  bool want_mapping = false;
  CbOptions cb;
};

/// Decides isomorphism of two connected graphs of maximum degree 3 by
/// anchoring the smallest edge of g1, merging with every edge of g2 in
/// turn, and searching the generators of the anchored automorphism group
/// for a side swap. Vertex count, edge count, and degree sequence are
/// checked first. A returned mapping is always verified.
IsoResult isomorphic(const Graph& g1, const Graph& g2,
                     const IsoOptions& opts = {});

/// True iff mapping is a bijection carrying E(g1) exactly onto E(g2).
bool verify_mapping(const Graph& g1, const Graph& g2,
                    const std::vector<int>& mapping);

}  // namespace trivalent
