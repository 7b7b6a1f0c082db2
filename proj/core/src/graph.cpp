#include "trivalent/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trivalent {

Graph::Graph(int vertex_count) : adjacency_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative size");
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : Graph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.first, e.second);
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
  adjacency_[u].insert(
      std::lower_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(
      std::lower_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::sorted_degree_sequence() const {
  std::vector<int> degrees;
  degrees.reserve(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) degrees.push_back(degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        queue.push_back(v);
      }
    }
  }
  return visited == n;
}

ValidationReport validate(const Graph& g, int valence_bound) {
  ValidationReport report;
  report.connected = g.is_connected();
  for (int v = 0; v < g.vertex_count(); ++v)
    report.max_degree = std::max(report.max_degree, g.degree(v));
  report.degree_ok = report.max_degree <= valence_bound;
  return report;
}

int NamedGraph::vertex_of(long label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw std::invalid_argument("vertex_of: unknown label");
  return static_cast<int>(it - labels.begin());
}

NamedGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<long, long>> raw_edges;
  std::map<long, int> label_index;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream row(line);
    long u, v;
    if (!(row >> u)) continue;  // blank line
    if (!(row >> v))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two labels");
    long extra;
    if (row >> extra)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": trailing tokens");
    if (u < 1 || v < 1)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": labels are 1-based");
    raw_edges.emplace_back(u, v);
    label_index.emplace(u, 0);
    label_index.emplace(v, 0);
  }

  NamedGraph named;
  named.labels.reserve(label_index.size());
  for (auto& [label, index] : label_index) {
    index = static_cast<int>(named.labels.size());
    named.labels.push_back(label);
  }
  named.graph = Graph(static_cast<int>(named.labels.size()));
  for (const auto& [u, v] : raw_edges)
    named.graph.add_edge(label_index[u], label_index[v]);
  return named;
}

NamedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const NamedGraph& g) {
  for (const Edge& e : g.graph.edges())
    out << g.labels[e.first] << ' ' << g.labels[e.second] << '\n';
}

}  // namespace trivalent
