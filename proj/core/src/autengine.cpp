#include "trivalent/autengine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace trivalent {

namespace {

void check_transition(const LayeredGraph& layers, int r) {
  if (r < 1 || r > static_cast<int>(layers.transitions.size()))
    throw std::invalid_argument("level index out of range");
}

}  // namespace

std::vector<Perm> kernel_generators(const LayeredGraph& layers, int r) {
  check_transition(layers, r);
  const int n = layers.graph.vertex_count();
  std::vector<Perm> gens;
  for (const auto& [u, v] : layers.transitions[r - 1].twins)
    gens.push_back(transposition(n, u, v));
  return gens;
}

LevelDomain level_domain(const LayeredGraph& layers, int r,
                         const std::vector<Perm>& level_group) {
  check_transition(layers, r);
  const LayeredGraph::Transition& t = layers.transitions[r - 1];

  enum Flag { kNone = 0, kPrime = 1, kOne = 2, kTwo = 4 };
  std::map<PointSet, int> flags;
  for (const auto& [father, children] : t.children_by_father)
    flags[father] |= children.size() == 1 ? kOne : kTwo;
  for (const Edge& edge : t.new_edges)
    flags[{std::min(edge.first, edge.second),
           std::max(edge.first, edge.second)}] |= kPrime;

  // Close the collection under the level group so that the induced action
  // is a permutation of the alphabet; padding elements stay unflagged.
  std::deque<PointSet> work;
  for (const auto& [element, flag] : flags) work.push_back(element);
  while (!work.empty()) {
    const PointSet current = std::move(work.front());
    work.pop_front();
    for (const Perm& g : level_group) {
      PointSet image = act_on_subset(g, current);
      if (flags.emplace(image, kNone).second) work.push_back(std::move(image));
    }
  }

  LevelDomain out;
  std::vector<PointSet> elements;
  std::vector<int> colors;

  // old vertices first, with a color of their own
  const PointSet old_vertices =
      r >= 2 ? layers.vertices[r - 2] : PointSet{};
  for (int w : old_vertices) {
    elements.push_back({w});
    colors.push_back(0);
  }

  for (const auto& [element, flag] : flags) {
    out.constraint.push_back(static_cast<int>(elements.size()));
    elements.push_back(element);
    const bool prime = flag & kPrime;
    const int family = (flag & kOne) ? 0 : (flag & kTwo) ? 1 : 2;
    colors.push_back(1 + (prime ? 0 : 3) + family);
    if (prime) out.a_prime.push_back(element);
    if (flag & kOne) out.a_one.push_back(element);
    if (flag & kTwo) out.a_two.push_back(element);
  }

  out.domain = ColoredDomain(std::move(elements), std::move(colors));
  return out;
}

std::vector<Perm> image_generators(const std::vector<Perm>& level_group,
                                   const LevelDomain& dom,
                                   const CbOptions& cb) {
  if (level_group.empty()) return {};
  const int n = level_group[0].degree();
  const Coset result =
      c_b(Coset::of(Perm(n), level_group), dom.constraint, dom.domain, cb);
  if (result.empty)
    throw std::logic_error("image_generators: identity coset came back empty");
  return result.gens;
}

Perm pullback(const Perm& sigma, const LayeredGraph& layers, int r) {
  check_transition(layers, r);
  const LayeredGraph::Transition& t = layers.transitions[r - 1];
  std::vector<int> images = sigma.images();
  for (const auto& [father, children] : t.children_by_father) {
    const PointSet image_father = act_on_subset(sigma, father);
    const auto it = t.children_by_father.find(image_father);
    if (it == t.children_by_father.end() ||
        it->second.size() != children.size())
      throw std::invalid_argument(
          "pullback: sigma does not preserve the neighbor-set colors");
    for (std::size_t k = 0; k < children.size(); ++k)
      images[children[k]] = it->second[k];
  }
  return Perm(std::move(images));
}

namespace {

const Perm* find_swap(const std::vector<Perm>& gens, const Edge& probe) {
  for (const Perm& g : gens)
    if (g(probe.first) == probe.second) return &g;
  return nullptr;
}

}  // namespace

AutEResult aut_e(const Graph& g, Edge e, const AutEOptions& opts) {
  const ValidationReport report = validate(g, 3);
  if (!report.valid())
    throw std::invalid_argument(
        "aut_e: graph must be connected with maximum degree 3");
  if (opts.early_swap_probe) {
    // every element fixes e setwise, so "some generator swaps" decides
    // "some element swaps" only for e's own endpoints
    const Edge& probe = *opts.early_swap_probe;
    if (!((probe.first == e.first && probe.second == e.second) ||
          (probe.first == e.second && probe.second == e.first)))
      throw std::invalid_argument(
          "aut_e: the swap probe must name the endpoints of e");
  }

  const LayeredGraph layers = layer_sequence(g, e);
  const int n = g.vertex_count();

  AutEResult result;
  result.generators = {transposition(n, e.first, e.second)};
  if (opts.keep_level_generators)
    result.level_generators.push_back(result.generators);

  for (int r = 1; r < layers.levels(); ++r) {
    std::vector<Perm> next = kernel_generators(layers, r);
    const LevelDomain dom = level_domain(layers, r, result.generators);
    for (const Perm& s : image_generators(result.generators, dom, opts.cb))
      next.push_back(pullback(s, layers, r));
    result.generators = reduce_generating_sequence(next, n);
    if (opts.keep_level_generators)
      result.level_generators.push_back(result.generators);

    if (opts.early_swap_probe &&
        !find_swap(result.generators, *opts.early_swap_probe)) {
      result.aborted = true;
      return result;
    }
  }

  if (opts.early_swap_probe) {
    if (const Perm* swap = find_swap(result.generators, *opts.early_swap_probe))
      result.witness = *swap;
    else
      result.aborted = true;
  }
  return result;
}

AutEResult aut_e(const MergedInstance& m, const AutEOptions& opts) {
  return aut_e(m.graph, m.e, opts);
}

}  // namespace trivalent
