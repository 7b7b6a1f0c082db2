#include "trivalent/colorauto.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "trivalent/blocks.hpp"
#include "trivalent/sift_chain.hpp"

namespace trivalent {

ColoredDomain::ColoredDomain(std::vector<PointSet> elements,
                             std::vector<int> colors)
    : elements_(std::move(elements)), colors_(std::move(colors)) {
  if (elements_.size() != colors_.size())
    throw std::invalid_argument("ColoredDomain: element/color size mismatch");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const PointSet& el = elements_[i];
    if (el.empty() || !std::is_sorted(el.begin(), el.end()) ||
        std::adjacent_find(el.begin(), el.end()) != el.end())
      throw std::invalid_argument("ColoredDomain: element is not canonical");
    if (!index_.emplace(el, static_cast<int>(i)).second)
      throw std::invalid_argument("ColoredDomain: duplicate element");
  }
}

ColoredDomain ColoredDomain::points(int degree, std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != degree)
    throw std::invalid_argument("ColoredDomain::points: bad color count");
  std::vector<PointSet> elements;
  elements.reserve(degree);
  for (int x = 0; x < degree; ++x) elements.push_back({x});
  return ColoredDomain(std::move(elements), std::move(colors));
}

int ColoredDomain::index_of(const PointSet& element) const {
  auto it = index_.find(element);
  return it == index_.end() ? -1 : it->second;
}

Perm ColoredDomain::induce(const Perm& base) const {
  std::vector<int> images(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int j = index_of(act_on_subset(base, elements_[i]));
    if (j < 0)
      throw std::invalid_argument(
          "ColoredDomain::induce: image leaves the alphabet");
    images[i] = j;
  }
  return Perm(std::move(images));
}

namespace {

// The recursion tracks each group element together with its induced action
// on the alphabet as one block-diagonal permutation: base points on
// [0, n), alphabet indices shifted to [n, n+m). Composition and inversion
// then act componentwise and the sift-chain and block machinery apply
// unchanged; the answer is decoded by slicing off the base block.
class CbEngine {
 public:
  CbEngine(const ColoredDomain& dom, const CbOptions& opts, int base_degree)
      : dom_(dom), opts_(opts), n_(base_degree) {}

  Perm combine(const Perm& base) const {
    const Perm ind = dom_.induce(base);
    std::vector<int> images(n_ + dom_.size());
    for (int x = 0; x < n_; ++x) images[x] = base(x);
    for (int i = 0; i < dom_.size(); ++i) images[n_ + i] = n_ + ind(i);
    return Perm(std::move(images));
  }

  Perm slice_base(const Perm& combined) const {
    std::vector<int> images(combined.images().begin(),
                            combined.images().begin() + n_);
    return Perm(std::move(images));
  }

  int color_at(int shifted) const { return dom_.color(shifted - n_); }

  Precheck precheck(const Perm& rep, const PointSet& b) const {
    // counts per color of b and of rep(b)
    std::map<int, int> here, there;
    for (int x : b) {
      ++here[color_at(x)];
      ++there[color_at(rep(x))];
    }
    if (here != there) return Precheck::kReject;
    if (here.size() == 1) return Precheck::kAcceptWhole;
    return Precheck::kInconclusive;
  }

  struct Node {
    bool empty = true;
    Perm rep;
    std::vector<Perm> gens;
  };

  Node run(Node coset, PointSet b) {
    while (true) {
      if (coset.empty || b.empty()) return coset;
      switch (precheck(coset.rep, b)) {
        case Precheck::kReject:
          return Node{};
        case Precheck::kAcceptWhole:
          return coset;
        case Precheck::kInconclusive:
          break;
      }
      const std::vector<PointSet> parts = orbits(coset.gens, b);
      if (parts.size() == 1) return transitive_case(std::move(coset), b);
      // peel off orbits left to right: C_B = C_{Bk} ... C_{B1}
      PointSet rest;
      for (std::size_t k = 1; k < parts.size(); ++k)
        rest.insert(rest.end(), parts[k].begin(), parts[k].end());
      std::sort(rest.begin(), rest.end());
      coset = run(std::move(coset), parts[0]);
      b = std::move(rest);
    }
  }

  Node transitive_case(Node coset, const PointSet& b) {
    const BlockSystem system = minimal_block_system(coset.gens, b);
    if (system.blocks.size() != 2)
      throw std::invalid_argument(
          "c_b: transitive constituent has no two-block minimal system; "
          "generators do not generate a 2-group");
    const PointSet& left = system.blocks[0];
    const PointSet& right = system.blocks[1];

    Perm tau;
    std::vector<Perm> sub;
    stabilizer_split(coset.gens, left, &tau, &sub);

    // C_B(sigma G) = C_{B2}(C_{B1}(sigma H)) u C_{B2}(C_{B1}(sigma tau H))
    Node first = run(Node{false, coset.rep, sub}, left);
    first = run(std::move(first), right);
    Node second = run(Node{false, compose(coset.rep, tau), std::move(sub)}, left);
    second = run(std::move(second), right);
    return recombine(std::move(first), std::move(second));
  }

  // Splits G into the index-2 stabilizer H of `block` plus a coset
  // representative tau in G minus H.
  void stabilizer_split(const std::vector<Perm>& gens, const PointSet& block,
                        Perm* tau, std::vector<Perm>* sub) const {
    const auto member = [&block](const Perm& g) {
      return stabilizes_subset(g, block);
    };
    if (opts_.generators_are_sgs) {
      SgsSplit split = sgs_index2_subgroup(gens, member);
      *tau = std::move(split.tau);
      *sub = std::move(split.sub_sgs);
      return;
    }
    *sub = subgroup_generators(gens, n_ + dom_.size(), member, 2);
    for (const Perm& g : gens) {
      if (!member(g)) {
        *tau = g;
        return;
      }
    }
    throw std::logic_error("c_b: transitive group stabilizes its own block");
  }

  Node recombine(Node first, Node second) const {
    if (first.empty) return second;
    if (second.empty) return first;
    Perm bridge = compose(inverse(first.rep), second.rep);
    first.gens.push_back(std::move(bridge));
    // recombinations add one generator each; re-sift once the sequence
    // outgrows the domain
    if (first.gens.size() > static_cast<std::size_t>(n_ + dom_.size()))
      first.gens = reduce_generating_sequence(first.gens, n_ + dom_.size());
    return first;
  }

  // Structure-tree guided variant; the tree children replace the orbit and
  // block computations.
  Node run_guided(Node coset, const StructureTree& tree, int node_index) {
    while (true) {
      if (coset.empty) return coset;
      const StructureTree::Node& node = tree.nodes[node_index];
      switch (precheck(coset.rep, node.subset)) {
        case Precheck::kReject:
          return Node{};
        case Precheck::kAcceptWhole:
          return coset;
        case Precheck::kInconclusive:
          break;
      }
      const StructureTree::Node& left = tree.nodes[node.left];
      const int probe = left.subset.front();
      bool swaps = false;
      for (const Perm& g : coset.gens) {
        if (!std::binary_search(left.subset.begin(), left.subset.end(),
                                g(probe))) {
          swaps = true;
          break;
        }
      }
      if (!swaps) {
        coset = run_guided(std::move(coset), tree, node.left);
        node_index = node.right;
        continue;
      }
      Perm tau;
      std::vector<Perm> sub;
      stabilizer_split(coset.gens, left.subset, &tau, &sub);
      Node first = run_guided(Node{false, coset.rep, sub}, tree, node.left);
      first = run_guided(std::move(first), tree, node.right);
      Node second = run_guided(Node{false, compose(coset.rep, tau), std::move(sub)},
                               tree, node.left);
      second = run_guided(std::move(second), tree, node.right);
      return recombine(std::move(first), std::move(second));
    }
  }

 private:
  const ColoredDomain& dom_;
  CbOptions opts_;
  int n_;
};

}  // namespace

Coset c_b(const Coset& coset, const PointSet& b, const ColoredDomain& dom,
          const CbOptions& opts) {
  if (coset.empty) return Coset::empty_coset();
  const int n = coset.rep.degree();
  CbEngine engine(dom, opts, n);

  CbEngine::Node node;
  node.empty = false;
  node.rep = engine.combine(coset.rep);
  node.gens.reserve(coset.gens.size());
  for (const Perm& g : coset.gens) {
    if (g.degree() != n) throw std::invalid_argument("c_b: degree mismatch");
    node.gens.push_back(engine.combine(g));
  }

  PointSet shifted;
  shifted.reserve(b.size());
  for (int i : b) {
    if (i < 0 || i >= dom.size())
      throw std::invalid_argument("c_b: b contains invalid alphabet index");
    shifted.push_back(n + i);
  }

  CbEngine::Node result;
  if (opts.use_structure_tree && !shifted.empty()) {
    const BlockStabilizerFn stabilizer =
        [&](const std::vector<Perm>& gens,
            const PointSet& block) -> std::vector<Perm> {
      const auto member = [&block](const Perm& g) {
        return stabilizes_subset(g, block);
      };
      if (opts.generators_are_sgs)
        return sgs_index2_subgroup(gens, member).sub_sgs;
      return subgroup_generators(gens, n + dom.size(), member, 2);
    };
    const StructureTree tree = structure_tree(shifted, node.gens, stabilizer);
    result = engine.run_guided(std::move(node), tree, tree.root);
  } else {
    result = engine.run(std::move(node), std::move(shifted));
  }

  if (result.empty) return Coset::empty_coset();
  Coset out;
  out.empty = false;
  out.rep = engine.slice_base(result.rep);
  out.gens.reserve(result.gens.size());
  for (const Perm& g : result.gens) out.gens.push_back(engine.slice_base(g));
  return out;
}

Precheck color_count_precheck(const Coset& coset, const PointSet& b,
                              const ColoredDomain& dom) {
  if (coset.empty)
    throw std::invalid_argument("color_count_precheck: empty coset");
  const Perm induced = dom.induce(coset.rep);
  std::map<int, int> here, there;
  for (int i : b) {
    if (i < 0 || i >= dom.size())
      throw std::invalid_argument("color_count_precheck: bad alphabet index");
    ++here[dom.color(i)];
    ++there[dom.color(induced(i))];
  }
  if (here != there) return Precheck::kReject;
  if (here.size() == 1) return Precheck::kAcceptWhole;
  return Precheck::kInconclusive;
}

}  // namespace trivalent
