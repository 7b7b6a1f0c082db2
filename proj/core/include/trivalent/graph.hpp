#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace trivalent {

using Edge = std::pair<int, int>;

/// Simple undirected graph on 0-based vertices with sorted adjacency lists.
class Graph {
public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  /// Inserts an undirected edge; rejects loops, duplicates and bad ids.
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;

  /// All edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  std::vector<int> sorted_degree_sequence() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

private:
  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
};

struct ValidationReport {
  bool simple = true;      // construction enforces this, kept for reporting
  bool connected = false;
  int max_degree = 0;
  bool degree_ok = false;  // max_degree <= requested bound

  bool valid() const { return simple && connected && degree_ok; }
};

ValidationReport validate(const Graph& g, int valence_bound);

/// A graph whose vertices carry the external 1-based labels they had in an
/// edge-list file; vertex i holds the i-th smallest label.
struct NamedGraph {
  Graph graph;
  std::vector<long> labels;

  int vertex_of(long label) const;
  long label_of(int vertex) const { return labels[vertex]; }
};

/// Parses the edge-list format: one "u v" pair per line with 1-based
/// labels, '#' starts a comment, blank lines are ignored.
NamedGraph read_edge_list(std::istream& in);
NamedGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const NamedGraph& g);

}  // namespace trivalent
