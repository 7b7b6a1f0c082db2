#pragma once

#include <functional>
#include <vector>

#include "trivalent/perm.hpp"
#include "trivalent/sift_chain.hpp"

namespace trivalent {

/// Partition of an orbit into equal-size cells permuted by the group.
struct BlockSystem {
  std::vector<PointSet> blocks;
  std::vector<int> block_of;  // indexed by point, -1 outside the orbit
};

/// Orbit partition of the domain under the generated group; cells are
/// sorted and listed by ascending minimal element. Throws when the domain
/// is not stable.
std::vector<PointSet> orbits(const std::vector<Perm>& generators,
                             const PointSet& domain);

/// The smallest block of the generated group containing {base_point, omega},
/// computed with Atkinson's class-merging procedure. The group must be
/// transitive on the orbit of base_point and omega must lie in it.
PointSet smallest_block(const std::vector<Perm>& generators, int base_point,
                        int omega);

/// A block system on which the generated group acts primitively. Requires
/// transitivity on the orbit. For a transitive 2-group the result has
/// exactly two blocks.
BlockSystem minimal_block_system(const std::vector<Perm>& generators,
                                 const PointSet& orbit);

/// Generators of the subgroup stabilizing every block of the system
/// setwise, through the subgroup-chain construction with the block-count
/// index bound.
std::vector<Perm> block_stabilizer(const std::vector<Perm>& generators,
                                   const BlockSystem& system);

/// Binary tree over a stable domain: leaves are the singletons, transitive
/// nodes split along a minimal two-block system, intransitive ones into the
/// first orbit versus the rest. Every group element lifts to a tree
/// automorphism.
struct StructureTree {
  struct Node {
    PointSet subset;
    int left = -1;   // node indices, -1 for leaves
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
};

/// Computes generators of the setwise stabilizer of `block` inside the
/// group given by `generators`; used to descend into transitive nodes.
using BlockStabilizerFn = std::function<std::vector<Perm>(
    const std::vector<Perm>& generators, const PointSet& block)>;

StructureTree structure_tree(const PointSet& domain,
                             const std::vector<Perm>& generators);

/// As above with a caller-chosen stabilizer routine (e.g. the smooth
/// generating sequence construction when one is available).
StructureTree structure_tree(const PointSet& domain,
                             const std::vector<Perm>& generators,
                             const BlockStabilizerFn& stabilizer);

}  // namespace trivalent
