#pragma once

#include <optional>
#include <vector>

#include "trivalent/colorauto.hpp"
#include "trivalent/layered.hpp"
#include "trivalent/perm.hpp"
#include "trivalent/sift_chain.hpp"

namespace trivalent {

/// Colored alphabet of one lifting step r -> r+1: the old vertices of
/// V(X_{r-1}) as singletons plus the collection A_r of neighbor sets and
/// new-edge pairs over V_r, closed under the level group so the induced
/// action is total. Colors encode the membership pattern in A' and in
/// A_1/A_2; closure padding and old vertices carry their own colors and
/// the constraint set covers exactly the A_r part.
struct LevelDomain {
  ColoredDomain domain;
  PointSet constraint;           // alphabet indices of the A_r part
  std::vector<PointSet> a_prime; // new edges between level-r vertices
  std::vector<PointSet> a_one;   // neighbor sets of exactly one child
  std::vector<PointSet> a_two;   // neighbor sets of twins
};

/// One transposition per twin pair of layer r+1, on the full vertex domain.
std::vector<Perm> kernel_generators(const LayeredGraph& layers, int r);

LevelDomain level_domain(const LayeredGraph& layers, int r,
                         const std::vector<Perm>& level_group);

/// Generators of the color-preserving subgroup of the level group, i.e. of
/// the image of the restriction homomorphism from the next level.
std::vector<Perm> image_generators(const std::vector<Perm>& level_group,
                                   const LevelDomain& dom,
                                   const CbOptions& cb = {});

/// Extends a color-preserving level-r automorphism to level r+1: only
/// children follow their neighbor sets, twin pairs map in ascending order.
/// Throws std::invalid_argument when sigma admits no extension.
Perm pullback(const Perm& sigma, const LayeredGraph& layers, int r);

struct AutEOptions {
  /// When set to the endpoint pair of e, scan each level for a generator
  /// swapping it and stop as soon as none does (no extension can swap
  /// then). Pairs other than e's endpoints are rejected.
  std::optional<Edge> early_swap_probe;
  /// Record the generator list of every level (diagnostics and tests).
  bool keep_level_generators = false;
  CbOptions cb;
};

struct AutEResult {
  std::vector<Perm> generators;       // of Aut_e at the last computed level
  std::optional<Perm> witness;        // probe swap found at the final level
  bool aborted = false;               // probe ruled a swap out early
  std::vector<std::vector<Perm>> level_generators;
};

/// The level-by-level construction of Aut_e(X): kernel from twins, image
/// through the colored constraint set, pullback to the next level.
AutEResult aut_e(const Graph& g, Edge e, const AutEOptions& opts = {});
AutEResult aut_e(const MergedInstance& m, const AutEOptions& opts = {});

}  // namespace trivalent
