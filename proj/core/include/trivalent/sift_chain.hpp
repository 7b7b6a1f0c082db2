#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trivalent/perm.hpp"

namespace trivalent {

/// Membership predicate on permutations, required to cut out a subgroup.
using MemberPredicate = std::function<bool(const Perm&)>;

/// Coset-representative table for the point-stabilizer chain
///
///   1 = G_{n-1} <= ... <= G_1 <= G_0 = G,
///
/// where G_i fixes the points 0..i-1 pointwise. Level i holds left coset
/// representatives C_i of G_i modulo G_{i+1}, always starting with the
/// identity. Once closed, G = C_0 C_1 ... C_{n-2} and the table answers
/// order and membership queries.
class SiftChain {
public:
  explicit SiftChain(int degree);

  struct SiftOutcome {
    bool inserted = false;
    int level = -1;  // insertion level when inserted
  };

  /// Reduces alpha through the representative lists; appends the residue to
  /// the first level whose coset is missing. No-op for represented elements.
  SiftOutcome sift(const Perm& alpha);

  /// Runs the product closure C_i * C_j (i >= j) to a fixpoint. Afterwards
  /// order() and contains() are exact.
  void close();

  bool closed() const { return closed_; }
  int degree() const { return degree_; }

  /// Product of the coset-list sizes. Throws std::overflow_error if the
  /// order does not fit in 64 bits (see order_pow2_exponent for 2-groups).
  std::uint64_t order() const;

  /// If every level size is a power of two (always true for 2-groups),
  /// returns the exponent k with order = 2^k; otherwise -1.
  int order_pow2_exponent() const;

  /// Non-mutating membership test; requires a closed chain.
  bool contains(const Perm& sigma) const;

  /// Stored representatives per level; the identity member of every C_i is
  /// implicit and not stored.
  const std::vector<std::vector<Perm>>& levels() const { return cosets_; }

  /// One line per level, "level i: [...]" in cycle notation.
  std::string dump() const;

private:
  int degree_;
  bool closed_ = false;
  std::vector<std::vector<Perm>> cosets_;
};

/// Builds a closed chain for the group generated by the given permutations.
SiftChain close_generators(const std::vector<Perm>& generators, int degree);

/// Generators for the subgroup H = { g in <generators> : member(g) }.
///
/// H must be closed under products and inverses and have index at most
/// index_bound in the generated group; the bound is enforced on the size of
/// the top-level transversal and its violation throws std::invalid_argument.
std::vector<Perm> subgroup_generators(const std::vector<Perm>& generators,
                                      int degree,
                                      const MemberPredicate& member,
                                      int index_bound);

/// Order-preserving reduction of a generating sequence: drops identities
/// and every element already represented by the sift chain of the kept
/// prefix. The generated group is unchanged and a smooth sequence stays
/// smooth.
std::vector<Perm> reduce_generating_sequence(const std::vector<Perm>& gens,
                                             int degree);

/// A smooth generating sequence: every prefix subgroup has index at most 2
/// in the next one.
using Sgs = std::vector<Perm>;

struct SgsSplit {
  Perm tau;     // first generator outside the subgroup
  Sgs sub_sgs;  // same length as the input, generates the subgroup
};

/// Given an SGS of a 2-group G and a membership test for a subgroup H of
/// index exactly 2, produces an SGS for H: tau is the first generator
/// outside H and each g_i outside H is replaced by tau^{-1} g_i. Throws
/// std::invalid_argument when every generator satisfies member.
SgsSplit sgs_index2_subgroup(const Sgs& sgs, const MemberPredicate& member);

}  // namespace trivalent
