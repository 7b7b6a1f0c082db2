#include "trivalent/iso.hpp"

#include <numeric>
#include <stdexcept>

#include "trivalent/autengine.hpp"
#include "trivalent/layered.hpp"

namespace trivalent {

bool verify_mapping(const Graph& g1, const Graph& g2,
                    const std::vector<int>& mapping) {
  const int n = g1.vertex_count();
  if (static_cast<int>(mapping.size()) != n || g2.vertex_count() != n)
    return false;
  std::vector<char> hit(n, 0);
  for (int image : mapping) {
    if (image < 0 || image >= n || hit[image]) return false;
    hit[image] = 1;
  }
  if (g1.edge_count() != g2.edge_count()) return false;
  for (const Edge& e : g1.edges())
    if (!g2.has_edge(mapping[e.first], mapping[e.second])) return false;
  return true;
}

IsoResult isomorphic(const Graph& g1, const Graph& g2,
                     const IsoOptions& opts) {
  for (const Graph* g : {&g1, &g2}) {
    const ValidationReport report = validate(*g, 3);
    if (!report.valid())
      throw std::invalid_argument(
          "isomorphic: inputs must be connected with maximum degree 3");
  }

  IsoResult negative{false, std::nullopt};
  if (g1.vertex_count() != g2.vertex_count()) return negative;
  if (g1.edge_count() != g2.edge_count()) return negative;
  if (g1.sorted_degree_sequence() != g2.sorted_degree_sequence())
    return negative;

  const int n = g1.vertex_count();
  if (n <= 2) {
    // single vertex, or two vertices joined by the lone edge
    IsoResult result{true, std::nullopt};
    if (opts.want_mapping) {
      std::vector<int> identity(n);
      std::iota(identity.begin(), identity.end(), 0);
      result.mapping = std::move(identity);
    }
    return result;
  }

  const Edge e1 = g1.edges().front();
  for (const Edge& e2 : g2.edges()) {
    const MergedInstance merged = build_x(g1, e1, g2, e2);
    AutEOptions aut_opts;
    aut_opts.early_swap_probe = merged.e;
    aut_opts.cb = opts.cb;
    const AutEResult aut = aut_e(merged, aut_opts);
    if (!aut.witness) continue;

    const Perm& sigma = *aut.witness;
    std::vector<int> mapping(n);
    for (int x = 0; x < n; ++x) {
      const int image = sigma(x);
      if (merged.origin[image].side != MergedInstance::Side::kRight)
        throw std::logic_error("isomorphic: witness does not swap the sides");
      mapping[x] = merged.origin[image].original;
    }
    if (!verify_mapping(g1, g2, mapping))
      throw std::logic_error("isomorphic: witness failed verification");
    IsoResult result{true, std::nullopt};
    if (opts.want_mapping) result.mapping = std::move(mapping);
    return result;
  }
  return negative;
}

}  // namespace trivalent
