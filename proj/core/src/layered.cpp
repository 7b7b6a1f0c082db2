#include "trivalent/layered.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace trivalent {

MergedInstance build_x(const Graph& g1, Edge e1, const Graph& g2, Edge e2) {
  if (!g1.has_edge(e1.first, e1.second))
    throw std::invalid_argument("build_x: e1 is not an edge of g1");
  if (!g2.has_edge(e2.first, e2.second))
    throw std::invalid_argument("build_x: e2 is not an edge of g2");

  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  MergedInstance m;
  m.left_count = n1;
  m.right_count = n2;
  m.v1 = n1 + n2;
  m.v2 = n1 + n2 + 1;
  m.e = {m.v1, m.v2};
  m.graph = Graph(n1 + n2 + 2);
  m.origin.resize(n1 + n2 + 2);
  for (int v = 0; v < n1; ++v)
    m.origin[v] = {MergedInstance::Side::kLeft, v};
  for (int v = 0; v < n2; ++v)
    m.origin[n1 + v] = {MergedInstance::Side::kRight, v};
  m.origin[m.v1] = {MergedInstance::Side::kBridge, -1};
  m.origin[m.v2] = {MergedInstance::Side::kBridge, -1};

  for (const Edge& edge : g1.edges())
    if (edge != Edge{std::min(e1.first, e1.second), std::max(e1.first, e1.second)})
      m.graph.add_edge(edge.first, edge.second);
  m.graph.add_edge(e1.first, m.v1);
  m.graph.add_edge(e1.second, m.v1);

  for (const Edge& edge : g2.edges())
    if (edge != Edge{std::min(e2.first, e2.second), std::max(e2.first, e2.second)})
      m.graph.add_edge(n1 + edge.first, n1 + edge.second);
  m.graph.add_edge(n1 + e2.first, m.v2);
  m.graph.add_edge(n1 + e2.second, m.v2);

  m.graph.add_edge(m.v1, m.v2);
  return m;
}

LayeredGraph layer_sequence(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("layer_sequence: e is not an edge");
  const int n = g.vertex_count();

  LayeredGraph lg;
  lg.graph = g;
  lg.e = e;
  lg.distance.assign(n, -1);

  std::deque<int> queue{e.first, e.second};
  lg.distance[e.first] = 0;
  lg.distance[e.second] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (lg.distance[v] < 0) {
        lg.distance[v] = lg.distance[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (lg.distance[v] < 0)
      throw std::invalid_argument("layer_sequence: graph is not connected");

  // An edge other than e enters the sequence two levels after its closer
  // endpoint; the sequence ends once every edge is present.
  int levels = 1;
  for (const Edge& edge : g.edges()) {
    if (edge == Edge{std::min(e.first, e.second), std::max(e.first, e.second)})
      continue;
    levels = std::max(levels,
                      std::min(lg.distance[edge.first], lg.distance[edge.second]) + 2);
  }

  std::vector<PointSet> by_distance(levels);
  for (int v = 0; v < n; ++v) {
    if (lg.distance[v] >= levels)
      throw std::logic_error("layer_sequence: vertex beyond the last level");
    by_distance[lg.distance[v]].push_back(v);
  }

  PointSet cumulative;
  for (int r = 1; r <= levels; ++r) {
    const PointSet& layer = by_distance[r - 1];
    cumulative.insert(cumulative.end(), layer.begin(), layer.end());
    std::sort(cumulative.begin(), cumulative.end());
    lg.vertices.push_back(cumulative);
    lg.layers.push_back(layer);
  }

  for (int r = 1; r < levels; ++r) {
    LayeredGraph::Transition t;
    t.next_layer = r < static_cast<int>(by_distance.size())
                       ? by_distance[r]
                       : PointSet{};
    for (int v : t.next_layer) {
      PointSet father;
      for (int w : g.neighbors(v))
        if (lg.distance[w] == r - 1) father.push_back(w);
      if (father.empty() || father.size() > 3)
        throw std::logic_error("layer_sequence: bad neighbor set size");
      t.neighbor_sets.emplace_back(v, father);
      t.children_by_father[father].push_back(v);
    }
    for (const auto& [father, children] : t.children_by_father) {
      if (children.size() > 2)
        throw std::logic_error(
            "layer_sequence: three vertices share a neighbor set");
      if (children.size() == 2)
        t.twins.emplace_back(children[0], children[1]);
    }
    if (r > 1) {
      // edges between two level-r vertices first appear in X_{r+1}; at
      // r = 1 the only candidate is e itself, which already lives in X_1
      for (const Edge& edge : g.edges()) {
        if (lg.distance[edge.first] == r - 1 &&
            lg.distance[edge.second] == r - 1)
          t.new_edges.push_back(edge);
      }
    }
    lg.transitions.push_back(std::move(t));
  }
  return lg;
}

LayeredGraph layer_sequence(const MergedInstance& m) {
  return layer_sequence(m.graph, m.e);
}

}  // namespace trivalent
