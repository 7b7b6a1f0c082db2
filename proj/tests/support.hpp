#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "trivalent/perm.hpp"
#include "trivalent/random_graphs.hpp"
#include "trivalent/sift_chain.hpp"

namespace testsupport {

using trivalent::Perm;
using trivalent::PointSet;

/// 1-based set literal, matching the labels used in cycle notation.
inline PointSet from1(std::initializer_list<int> labels) {
  PointSet out;
  for (int x : labels) out.push_back(x - 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Generators of a Sylow 2-subgroup of S_degree: one half-swap per node of
/// the binary trees over the 2-power intervals of the domain.
inline std::vector<Perm> sylow2_generators(int degree) {
  std::vector<Perm> gens;
  const auto add_swaps = [&](auto&& self, int start, int length) -> void {
    if (length < 2) return;
    std::vector<int> images(degree);
    for (int x = 0; x < degree; ++x) images[x] = x;
    for (int x = start; x < start + length / 2; ++x)
      std::swap(images[x], images[x + length / 2]);
    gens.emplace_back(std::move(images));
    self(self, start, length / 2);
    self(self, start + length / 2, length / 2);
  };
  int offset = 0;
  for (int bit = 30; bit >= 0; --bit) {
    if (!(degree & (1 << bit))) continue;
    add_swaps(add_swaps, offset, 1 << bit);
    offset += 1 << bit;
  }
  return gens;
}

/// A random 2-subgroup of S_degree together with a genuinely smooth
/// generating sequence, grown by accepting random Sylow elements exactly
/// when they double the prefix order.
inline trivalent::Sgs random_2group_sgs(int degree, trivalent::Rng& rng,
                                        int max_length = 8) {
  const std::vector<Perm> sylow = sylow2_generators(degree);
  trivalent::Sgs sgs;
  std::uint64_t order = 1;
  const int pool_size = 4 * max_length;
  for (int trial = 0; trial < pool_size; ++trial) {
    Perm candidate(degree);
    const int walk = 1 + rng.uniform(8);
    for (int step = 0; step < walk; ++step)
      candidate = compose(candidate, sylow[rng.uniform(static_cast<int>(sylow.size()))]);
    trivalent::Sgs extended = sgs;
    extended.push_back(candidate);
    const std::uint64_t extended_order =
        close_generators(extended, degree).order();
    if (extended_order == 2 * order) {
      sgs = std::move(extended);
      order = extended_order;
      if (static_cast<int>(sgs.size()) >= max_length) break;
    }
  }
  return sgs;
}

inline std::set<Perm> to_set(const std::vector<Perm>& perms) {
  return {perms.begin(), perms.end()};
}

}  // namespace testsupport
