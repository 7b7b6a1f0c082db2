#include "trivalent/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trivalent {

namespace {

void check_degrees(const std::vector<Perm>& generators) {
  for (std::size_t i = 1; i < generators.size(); ++i)
    if (generators[i].degree() != generators[0].degree())
      throw std::invalid_argument("generators have mixed degrees");
}

// Union-find keeping the minimum of each class as its representative,
// which is what Atkinson's merging procedure relies on.
class MinUnionFind {
 public:
  explicit MinUnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the displaced (larger) representative, or -1 if nothing merged.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return b;
  }

 private:
  std::vector<int> parent_;
};

PointSet orbit_of(const std::vector<Perm>& generators, int start) {
  PointSet orbit{start};
  std::vector<char> seen(generators.empty() ? start + 1
                                            : generators[0].degree());
  seen[start] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& g : generators) {
      const int image = g(orbit[head]);
      if (!seen[image]) {
        seen[image] = 1;
        orbit.push_back(image);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

std::vector<PointSet> orbits(const std::vector<Perm>& generators,
                             const PointSet& domain) {
  check_degrees(generators);
  std::set<int> remaining(domain.begin(), domain.end());
  std::vector<PointSet> cells;
  while (!remaining.empty()) {
    const int start = *remaining.begin();
    PointSet cell = orbit_of(generators, start);
    for (int x : cell) {
      if (!remaining.erase(x))
        throw std::invalid_argument("orbits: domain is not stable");
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

PointSet smallest_block(const std::vector<Perm>& generators, int base_point,
                        int omega) {
  check_degrees(generators);
  if (generators.empty())
    throw std::invalid_argument("smallest_block: no generators");
  const int degree = generators[0].degree();
  if (base_point == omega)
    throw std::invalid_argument("smallest_block: omega equals the base point");
  const PointSet orbit = orbit_of(generators, base_point);
  if (!std::binary_search(orbit.begin(), orbit.end(), omega))
    throw std::invalid_argument("smallest_block: group is not transitive");

  MinUnionFind classes(degree);
  std::deque<int> queue;
  queue.push_back(classes.unite(base_point, omega));

  while (!queue.empty()) {
    const int beta = queue.front();
    queue.pop_front();
    const int alpha = classes.find(beta);
    for (const Perm& g : generators) {
      const int displaced = classes.unite(g(alpha), g(beta));
      if (displaced >= 0) queue.push_back(displaced);
    }
  }

  const int root = classes.find(base_point);
  PointSet block;
  for (int x : orbit)
    if (classes.find(x) == root) block.push_back(x);
  return block;
}

namespace {

// Action of a generator on the cells of a G-invariant partition.
Perm quotient_perm(const Perm& g, const std::vector<PointSet>& cells,
                   const std::vector<int>& cell_of) {
  std::vector<int> images(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const int image_cell = cell_of[g(cells[c].front())];
    for (int x : cells[c]) {
      if (cell_of[g(x)] != image_cell)
        throw std::logic_error("partition is not invariant under the group");
    }
    images[c] = image_cell;
  }
  return Perm(std::move(images));
}

}  // namespace

BlockSystem minimal_block_system(const std::vector<Perm>& generators,
                                 const PointSet& orbit) {
  check_degrees(generators);
  if (orbit.size() < 2)
    throw std::invalid_argument("minimal_block_system: orbit too small");
  if (generators.empty() ||
      orbits(generators, orbit).size() != 1)
    throw std::invalid_argument("minimal_block_system: group not transitive");
  const int degree = generators[0].degree();

  // Start from singletons and coarsen until the quotient action is
  // primitive. Each round works on the quotient through induced
  // permutations of the current cells.
  std::vector<PointSet> cells;
  cells.reserve(orbit.size());
  for (int x : orbit) cells.push_back({x});

  while (cells.size() > 2) {
    std::vector<int> cell_of(degree, -1);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int x : cells[c]) cell_of[x] = static_cast<int>(c);

    std::vector<Perm> quotient;
    quotient.reserve(generators.size());
    for (const Perm& g : generators)
      quotient.push_back(quotient_perm(g, cells, cell_of));

    const int k = static_cast<int>(cells.size());
    PointSet proper;
    for (int omega = 1; omega < k && proper.empty(); ++omega) {
      PointSet candidate = smallest_block(quotient, 0, omega);
      if (static_cast<int>(candidate.size()) < k) proper = std::move(candidate);
    }
    if (proper.empty()) break;  // quotient is primitive

    // The system of translates of the proper block coarsens the cells.
    std::set<PointSet> translates{proper};
    std::deque<PointSet> work{proper};
    while (!work.empty()) {
      PointSet current = std::move(work.front());
      work.pop_front();
      for (const Perm& g : quotient) {
        PointSet image = act_on_subset(g, current);
        if (translates.insert(image).second) work.push_back(std::move(image));
      }
    }

    std::vector<PointSet> merged;
    merged.reserve(translates.size());
    for (const PointSet& t : translates) {
      PointSet united;
      for (int c : t)
        united.insert(united.end(), cells[c].begin(), cells[c].end());
      std::sort(united.begin(), united.end());
      merged.push_back(std::move(united));
    }
    std::sort(merged.begin(), merged.end());
    cells = std::move(merged);
  }

  BlockSystem system;
  system.blocks = std::move(cells);
  system.block_of.assign(degree, -1);
  for (std::size_t c = 0; c < system.blocks.size(); ++c)
    for (int x : system.blocks[c]) system.block_of[x] = static_cast<int>(c);
  return system;
}

std::vector<Perm> block_stabilizer(const std::vector<Perm>& generators,
                                   const BlockSystem& system) {
  check_degrees(generators);
  if (generators.empty()) return {};
  const int degree = generators[0].degree();
  const int block_count = static_cast<int>(system.blocks.size());

  // Stabilize one block after another; by the index lemma the i-th step
  // has index at most block_count - i.
  std::vector<Perm> current = generators;
  for (int i = 0; i < block_count; ++i) {
    const PointSet& block = system.blocks[i];
    const auto member = [&block](const Perm& g) {
      return stabilizes_subset(g, block);
    };
    if (std::all_of(current.begin(), current.end(), member)) continue;
    current = subgroup_generators(current, degree, member,
                                  std::max(2, block_count - i));
  }
  return current;
}

namespace {

int build_tree(const PointSet& subset, std::vector<Perm> gens,
               const BlockStabilizerFn& stabilizer, StructureTree* tree);

// Deep-copies a subtree while mapping every node subset through tau.
int mirror_tree(int source, const Perm& tau, StructureTree* tree) {
  const StructureTree::Node copy = tree->nodes[source];
  StructureTree::Node node;
  node.subset = act_on_subset(tau, copy.subset);
  if (copy.left >= 0) {
    node.left = mirror_tree(copy.left, tau, tree);
    node.right = mirror_tree(copy.right, tau, tree);
  }
  tree->nodes.push_back(std::move(node));
  return static_cast<int>(tree->nodes.size()) - 1;
}

int build_tree(const PointSet& subset, std::vector<Perm> gens,
               const BlockStabilizerFn& stabilizer, StructureTree* tree) {
  if (subset.size() == 1) {
    tree->nodes.push_back({subset, -1, -1});
    return static_cast<int>(tree->nodes.size()) - 1;
  }
  const std::vector<PointSet> parts = orbits(gens, subset);
  int left, right;
  if (parts.size() > 1) {
    PointSet rest;
    for (std::size_t k = 1; k < parts.size(); ++k)
      rest.insert(rest.end(), parts[k].begin(), parts[k].end());
    std::sort(rest.begin(), rest.end());
    left = build_tree(parts[0], gens, stabilizer, tree);
    right = build_tree(rest, std::move(gens), stabilizer, tree);
  } else {
    const BlockSystem system = minimal_block_system(gens, subset);
    if (system.blocks.size() != 2)
      throw std::invalid_argument(
          "structure_tree: transitive node without a two-block system; "
          "generators do not generate a 2-group");
    std::vector<Perm> sub = stabilizer(gens, system.blocks[0]);
    const Perm* tau = nullptr;
    for (const Perm& g : gens) {
      if (!stabilizes_subset(g, system.blocks[0])) {
        tau = &g;
        break;
      }
    }
    if (!tau) throw std::logic_error("structure_tree: missing swap element");
    left = build_tree(system.blocks[0], std::move(sub), stabilizer, tree);
    right = mirror_tree(left, *tau, tree);
  }
  tree->nodes.push_back({subset, left, right});
  return static_cast<int>(tree->nodes.size()) - 1;
}

}  // namespace

StructureTree structure_tree(const PointSet& domain,
                             const std::vector<Perm>& generators) {
  check_degrees(generators);
  const int degree = generators.empty() ? 0 : generators[0].degree();
  return structure_tree(
      domain, generators,
      [degree](const std::vector<Perm>& gens, const PointSet& block) {
        const auto member = [&block](const Perm& g) {
          return stabilizes_subset(g, block);
        };
        return subgroup_generators(gens, degree, member, 2);
      });
}

StructureTree structure_tree(const PointSet& domain,
                             const std::vector<Perm>& generators,
                             const BlockStabilizerFn& stabilizer) {
  if (domain.empty())
    throw std::invalid_argument("structure_tree: empty domain");
  StructureTree tree;
  tree.root = build_tree(domain, generators, stabilizer, &tree);
  return tree;
}

}  // namespace trivalent
