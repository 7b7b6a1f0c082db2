#pragma once

#include <map>
#include <vector>

#include "trivalent/graph.hpp"
#include "trivalent/perm.hpp"

namespace trivalent {

/// The merged graph X built from two inputs: each distinguished edge is
/// subdivided by a new vertex and the two subdivision vertices are joined
/// by the new edge e = (v1, v2).
struct MergedInstance {
  enum class Side { kLeft, kRight, kBridge };
  struct Origin {
    Side side;
    int original;  // vertex id in the source graph, -1 for the bridge
  };

  Graph graph;
  Edge e;
  int v1 = -1;
  int v2 = -1;
  int left_count = 0;
  int right_count = 0;
  std::vector<Origin> origin;
};

MergedInstance build_x(const Graph& g1, Edge e1, const Graph& g2, Edge e2);

/// The nested subgraph sequence X_1 <= X_2 <= ... <= X_m = X of everything
/// lying on paths of length <= r through e. Level r holds the vertices at
/// path-distance <= r-1 from e; the transition r -> r+1 records the
/// neighbor map f of the next layer, its twin pairs, and the edges between
/// level-r vertices that first appear in X_{r+1}.
struct LayeredGraph {
  struct Transition {
    PointSet next_layer;                       // V_{r+1}
    std::map<PointSet, PointSet> children_by_father;  // f^{-1} as sorted lists
    std::vector<std::pair<int, PointSet>> neighbor_sets;  // (v, f(v)), v ascending
    std::vector<std::pair<int, int>> twins;    // ascending pairs in V_{r+1}
    std::vector<Edge> new_edges;               // within V_r, new in X_{r+1}
  };

  Graph graph;
  Edge e;
  std::vector<int> distance;        // path-distance to e per vertex
  std::vector<PointSet> vertices;   // V(X_r), index r-1
  std::vector<PointSet> layers;     // V_r, index r-1
  std::vector<Transition> transitions;  // step r -> r+1, index r-1

  int levels() const { return static_cast<int>(vertices.size()); }
};

LayeredGraph layer_sequence(const Graph& g, Edge e);
LayeredGraph layer_sequence(const MergedInstance& m);

}  // namespace trivalent
