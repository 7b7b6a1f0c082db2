#include "trivalent/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace trivalent::oracle {

std::vector<Perm> enumerate_group(const std::vector<Perm>& generators,
                                  std::size_t order_guard) {
  if (generators.empty())
    throw std::invalid_argument("enumerate_group: no generators");
  const int degree = generators[0].degree();
  std::set<Perm> elements{Perm(degree)};
  std::deque<Perm> work{Perm(degree)};
  while (!work.empty()) {
    const Perm current = std::move(work.front());
    work.pop_front();
    for (const Perm& g : generators) {
      Perm product = compose(g, current);
      if (elements.size() >= order_guard && !elements.count(product))
        throw std::invalid_argument("enumerate_group: order guard exceeded");
      if (elements.insert(product).second) work.push_back(std::move(product));
    }
  }
  return {elements.begin(), elements.end()};
}

namespace {

bool extend_iso(const Graph& g1, const Graph& g2, std::vector<int>& mapping,
                std::vector<char>& used, int vertex) {
  const int n = g1.vertex_count();
  if (vertex == n) return true;
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate] || g2.degree(candidate) != g1.degree(vertex)) continue;
    bool consistent = true;
    for (int w = 0; w < vertex && consistent; ++w)
      if (g1.has_edge(vertex, w) != g2.has_edge(candidate, mapping[w]))
        consistent = false;
    if (!consistent) continue;
    mapping[vertex] = candidate;
    used[candidate] = 1;
    if (extend_iso(g1, g2, mapping, used, vertex + 1)) return true;
    used[candidate] = 0;
  }
  return false;
}

}  // namespace

bool brute_iso(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > 10 || g2.vertex_count() > 10)
    throw std::invalid_argument("brute_iso: size guard exceeded");
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count())
    return false;
  std::vector<int> mapping(g1.vertex_count(), -1);
  std::vector<char> used(g1.vertex_count(), 0);
  return extend_iso(g1, g2, mapping, used, 0);
}

namespace {

void collect_automorphisms(const Graph& g, std::vector<int>& mapping,
                           std::vector<char>& used, int vertex,
                           std::vector<Perm>* out) {
  const int n = g.vertex_count();
  if (vertex == n) {
    out->push_back(Perm(mapping));
    return;
  }
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate] || g.degree(candidate) != g.degree(vertex)) continue;
    bool consistent = true;
    for (int w = 0; w < vertex && consistent; ++w)
      if (g.has_edge(vertex, w) != g.has_edge(candidate, mapping[w]))
        consistent = false;
    if (!consistent) continue;
    mapping[vertex] = candidate;
    used[candidate] = 1;
    collect_automorphisms(g, mapping, used, vertex + 1, out);
    used[candidate] = 0;
  }
}

}  // namespace

std::vector<Perm> brute_aut_e(const Graph& g, Edge e) {
  if (g.vertex_count() > 10)
    throw std::invalid_argument("brute_aut_e: size guard exceeded");
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("brute_aut_e: e is not an edge");
  std::vector<Perm> all;
  std::vector<int> mapping(g.vertex_count(), -1);
  std::vector<char> used(g.vertex_count(), 0);
  collect_automorphisms(g, mapping, used, 0, &all);

  std::vector<Perm> fixing;
  for (const Perm& sigma : all) {
    const bool fixes = (sigma(e.first) == e.first && sigma(e.second) == e.second) ||
                       (sigma(e.first) == e.second && sigma(e.second) == e.first);
    if (fixes) fixing.push_back(sigma);
  }
  return fixing;
}

std::vector<Perm> brute_color_aut(const std::vector<Perm>& generators,
                                  const Perm& sigma, const ColoredDomain& dom,
                                  const PointSet& b,
                                  std::size_t order_guard) {
  std::vector<Perm> result;
  std::vector<Perm> group =
      generators.empty() ? std::vector<Perm>{Perm(sigma.degree())}
                         : enumerate_group(generators, order_guard);
  for (const Perm& g : group) {
    const Perm candidate = compose(sigma, g);
    const Perm induced = dom.induce(candidate);
    bool preserves = true;
    for (int i : b) {
      if (dom.color(induced(i)) != dom.color(i)) {
        preserves = false;
        break;
      }
    }
    if (preserves) result.push_back(candidate);
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// The orbit of the unordered pair {a, b} under the generators, as a graph:
// per Sims, the component of the base point is the smallest block.
PointSet sims_component(const std::vector<Perm>& generators, int base_point,
                        int omega) {
  std::set<Edge> pair_orbit;
  std::deque<Edge> work;
  const Edge seed{std::min(base_point, omega), std::max(base_point, omega)};
  pair_orbit.insert(seed);
  work.push_back(seed);
  while (!work.empty()) {
    const Edge current = work.front();
    work.pop_front();
    for (const Perm& g : generators) {
      Edge image{g(current.first), g(current.second)};
      if (image.first > image.second) std::swap(image.first, image.second);
      if (pair_orbit.insert(image).second) work.push_back(image);
    }
  }

  std::map<int, std::vector<int>> adjacency;
  for (const Edge& e : pair_orbit) {
    adjacency[e.first].push_back(e.second);
    adjacency[e.second].push_back(e.first);
  }
  PointSet component{base_point};
  std::set<int> seen{base_point};
  std::deque<int> queue{base_point};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adjacency[u]) {
      if (seen.insert(v).second) {
        component.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(component.begin(), component.end());
  return component;
}

bool is_block(const std::vector<Perm>& group, const PointSet& candidate) {
  for (const Perm& g : group) {
    const PointSet image = act_on_subset(g, candidate);
    bool equal = image == candidate;
    if (!equal) {
      PointSet overlap;
      std::set_intersection(image.begin(), image.end(), candidate.begin(),
                            candidate.end(), std::back_inserter(overlap));
      if (!overlap.empty()) return false;
    }
  }
  return true;
}

}  // namespace

PointSet brute_smallest_block(const std::vector<Perm>& generators,
                              int base_point, int omega) {
  if (generators.empty())
    throw std::invalid_argument("brute_smallest_block: no generators");
  const int degree = generators[0].degree();
  if (degree > 12)
    throw std::invalid_argument("brute_smallest_block: size guard exceeded");

  const std::vector<Perm> group = enumerate_group(generators);

  // the orbit of the base point, which the block must live inside
  PointSet orbit;
  for (const Perm& g : group) orbit.push_back(g(base_point));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  if (!std::binary_search(orbit.begin(), orbit.end(), omega))
    throw std::invalid_argument("brute_smallest_block: group not transitive");

  PointSet others;
  for (int x : orbit)
    if (x != base_point && x != omega) others.push_back(x);

  PointSet best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
    PointSet candidate{std::min(base_point, omega), std::max(base_point, omega)};
    for (std::size_t bit = 0; bit < others.size(); ++bit)
      if (mask & (std::size_t{1} << bit)) candidate.push_back(others[bit]);
    std::sort(candidate.begin(), candidate.end());
    if (!best.empty() && candidate.size() >= best.size()) continue;
    if (is_block(group, candidate)) best = candidate;
  }

  const PointSet component = sims_component(generators, base_point, omega);
  if (best != component)
    throw std::logic_error(
        "brute_smallest_block: subset enumeration and the orbit-graph "
        "component disagree");
  return best;
}

namespace {

bool match_subtrees(const PhyloTree& t1, const PhyloTree& t2, int v1, int v2);

bool match_children(const PhyloTree& t1, const PhyloTree& t2,
                    const std::vector<int>& kids1, std::vector<int>& kids2,
                    std::size_t index) {
  if (index == kids1.size()) return true;
  for (std::size_t k = index; k < kids2.size(); ++k) {
    std::swap(kids2[index], kids2[k]);
    if (match_subtrees(t1, t2, kids1[index], kids2[index]) &&
        match_children(t1, t2, kids1, kids2, index + 1))
      return true;
    std::swap(kids2[index], kids2[k]);
  }
  return false;
}

bool match_subtrees(const PhyloTree& t1, const PhyloTree& t2, int v1, int v2) {
  if (t1.children[v1].size() != t2.children[v2].size()) return false;
  if (t1.is_leaf(v1)) {
    // anchored: leaves must carry the same taxon
    for (const auto& [taxon, leaf] : t1.leaf_of_taxon)
      if (leaf == v1) return t2.leaf_of_taxon.at(taxon) == v2;
    return false;
  }
  std::vector<int> kids2 = t2.children[v2];
  return match_children(t1, t2, t1.children[v1], kids2, 0);
}

}  // namespace

bool brute_phylo_isomorphic(const PhyloTree& t1, const PhyloTree& t2) {
  check_phylo(t1);
  check_phylo(t2);
  if (t1.node_count() != t2.node_count()) return false;
  if (t1.leaf_of_taxon.size() != t2.leaf_of_taxon.size()) return false;
  for (const auto& [taxon, leaf] : t1.leaf_of_taxon)
    if (!t2.leaf_of_taxon.count(taxon)) return false;
  return match_subtrees(t1, t2, t1.root, t2.root);
}

std::vector<Graph> connected_max3_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("connected_max3_graphs: size guard exceeded");
  if (n == 1) return {Graph(1)};

  const std::vector<Graph> smaller = connected_max3_graphs(n - 1);
  // keyed by (degree sequence, edge count) to keep the pairwise
  // deduplication buckets small
  std::map<std::pair<std::vector<int>, int>, std::vector<Graph>> buckets;

  for (const Graph& parent : smaller) {
    PointSet attachable;
    for (int v = 0; v < parent.vertex_count(); ++v)
      if (parent.degree(v) < 3) attachable.push_back(v);

    const std::size_t count = attachable.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
      if (std::popcount(mask) > 3) continue;
      Graph candidate(n);
      for (const Edge& e : parent.edges()) candidate.add_edge(e.first, e.second);
      for (std::size_t bit = 0; bit < count; ++bit)
        if (mask & (std::size_t{1} << bit))
          candidate.add_edge(attachable[bit], n - 1);

      auto key = std::make_pair(candidate.sorted_degree_sequence(),
                                candidate.edge_count());
      auto& bucket = buckets[key];
      bool fresh = true;
      for (const Graph& seen : bucket) {
        if (brute_iso(seen, candidate)) {
          fresh = false;
          break;
        }
      }
      if (fresh) bucket.push_back(std::move(candidate));
    }
  }

  std::vector<Graph> result;
  for (auto& [key, bucket] : buckets)
    for (Graph& g : bucket) result.push_back(std::move(g));
  return result;
}

}  // namespace trivalent::oracle
