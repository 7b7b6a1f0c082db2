#pragma once

#include <map>
#include <vector>

#include "trivalent/perm.hpp"

namespace trivalent {

/// Indexed colored alphabet acted on by a base permutation group. Elements
/// are canonical subsets of the base domain; plain points enter as
/// singletons. The induced action on element indices is the adapter used
/// by the coset recursion.
class ColoredDomain {
public:
  ColoredDomain() = default;
  ColoredDomain(std::vector<PointSet> elements, std::vector<int> colors);

  /// Alphabet of all singletons of 0..degree-1, element index = point.
  static ColoredDomain points(int degree, std::vector<int> colors);

  int size() const { return static_cast<int>(elements_.size()); }
  int color(int index) const { return colors_[index]; }
  const PointSet& element(int index) const { return elements_[index]; }
  const std::vector<PointSet>& elements() const { return elements_; }

  /// Index of an element, -1 when absent.
  int index_of(const PointSet& element) const;

  /// The permutation of alphabet indices induced by a base permutation;
  /// throws std::invalid_argument when some image leaves the alphabet.
  Perm induce(const Perm& base) const;

private:
  std::vector<PointSet> elements_;
  std::vector<int> colors_;
  std::map<PointSet, int> index_;
};

/// A left coset rep * <gens> of a permutation group, or the distinguished
/// empty value. The empty coset is distinct from the identity coset.
struct Coset {
  bool empty = true;
  Perm rep;
  std::vector<Perm> gens;

  static Coset empty_coset() { return Coset{}; }
  static Coset of(Perm rep, std::vector<Perm> gens) {
    return Coset{false, std::move(rep), std::move(gens)};
  }
};

enum class Precheck {
  kReject,        // some color count differs between b and sigma(b): empty
  kAcceptWhole,   // b and sigma(b) lie in one color class: whole coset
  kInconclusive,
};

struct CbOptions {
  /// Treat coset.gens as a smooth generating sequence and keep the
  /// recursion on the index-2 subgroup construction. When false the
  /// block stabilizers come from the sift-chain subgroup routine instead.
  bool generators_are_sgs = true;
  /// Precompute a structure tree for (b, G) and let it guide the
  /// recursion instead of recomputing orbits and blocks per call.
  bool use_structure_tree = false;
};

/// The color automorphism coset C_b(sigma G) = elements of the coset whose
/// induced action preserves colors on b, returned as Empty or as a left
/// coset of C_b(G). The generated group must be a 2-group and b must be
/// stable under it.
Coset c_b(const Coset& coset, const PointSet& b, const ColoredDomain& dom,
          const CbOptions& opts = {});

/// The counting shortcut: per-color sizes of b versus its image decide
/// rejection (case 1a) and whole-coset acceptance (case 1b) without
/// recursion.
Precheck color_count_precheck(const Coset& coset, const PointSet& b,
                              const ColoredDomain& dom);

}  // namespace trivalent
