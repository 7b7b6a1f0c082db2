#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trivalent/graph.hpp"

namespace trivalent {

/// Rooted tree with its leaves bijectively labeled by taxa.
struct PhyloTree {
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // stored order drives traversal
  int root = -1;
  std::map<std::string, int> leaf_of_taxon;

  int node_count() const { return static_cast<int>(parent.size()); }
  bool is_leaf(int v) const { return children[v].empty(); }
};

/// Throws std::invalid_argument unless t is a single-rooted tree whose
/// leaves are exactly the labeled nodes, each taxon once.
void check_phylo(const PhyloTree& t);

/// Parses parenthesized tree text, e.g. "((a,b),(c,d));". Interior labels
/// are accepted and ignored; the trailing ';' is optional.
PhyloTree parse_newick(const std::string& text);

/// Bottom-up isomorphism anchored at the leaf labels: the unique candidate
/// mapping is grown through parents and rejected on the first conflict.
/// Returns the node mapping or nullopt; throws when the taxa sets differ.
/// Inputs are expected well-formed (parse_newick validates; run check_phylo
/// on hand-built trees); gross structural defects still raise errors.
std::optional<std::vector<int>> phylo_isomorphic(const PhyloTree& t1,
                                                 const PhyloTree& t2);

}  // namespace trivalent
