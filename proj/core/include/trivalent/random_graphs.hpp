#pragma once

#include <cstdint>
#include <random>

#include "trivalent/graph.hpp"
#include "trivalent/perm.hpp"

namespace trivalent {

/// Seeded RNG with a modulo-rejection uniform so that generated graphs are
/// identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound).
  int uniform(int bound);

private:
  std::mt19937_64 engine_;
};

Perm random_perm(int degree, Rng& rng);

/// Connected simple graph from the pairing model on the given degree
/// sequence; rejects and retries on loops, multi-edges or disconnection.
Graph random_graph_with_degrees(const std::vector<int>& degrees, Rng& rng);

/// Connected simple 3-regular graph on n vertices (n even, n >= 4).
Graph random_cubic_graph(int n, Rng& rng);

/// The graph with every edge (u, v) replaced by (p(u), p(v)).
Graph relabel(const Graph& g, const Perm& p);

}  // namespace trivalent
