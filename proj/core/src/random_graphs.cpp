#include "trivalent/random_graphs.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trivalent {

int Rng::uniform(int bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::uniform: bad bound");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(bound);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<int>(draw % static_cast<std::uint64_t>(bound));
}

Perm random_perm(int degree, Rng& rng) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (int i = degree - 1; i > 0; --i)
    std::swap(images[i], images[rng.uniform(i + 1)]);
  return Perm(std::move(images));
}

Graph random_graph_with_degrees(const std::vector<int>& degrees, Rng& rng) {
  const int n = static_cast<int>(degrees.size());
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v) {
    if (degrees[v] < 1)
      throw std::invalid_argument("random_graph_with_degrees: zero degree");
    for (int k = 0; k < degrees[v]; ++k) stubs.push_back(v);
  }
  if (stubs.size() % 2 != 0)
    throw std::invalid_argument("random_graph_with_degrees: odd stub count");

  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.uniform(i + 1)]);

    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      if (u == v || !edges.insert({std::min(u, v), std::max(u, v)}).second)
        simple = false;
    }
    if (!simple) continue;

    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.first, e.second);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error(
      "random_graph_with_degrees: no simple connected pairing found");
}

Graph random_cubic_graph(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("random_cubic_graph: n must be even and >= 4");
  return random_graph_with_degrees(std::vector<int>(n, 3), rng);
}

Graph relabel(const Graph& g, const Perm& p) {
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("relabel: degree mismatch");
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(p(e.first), p(e.second));
  return out;
}

}  // namespace trivalent
