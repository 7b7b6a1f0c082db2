#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace trivalent {

/// A sorted, duplicate-free set of 0-based points.
using PointSet = std::vector<int>;

/// A permutation of the points 0..n-1, stored as its image table.
///
/// Composition is right-to-left throughout: compose(p, q) applies q first,
/// i.e. compose(p, q)(x) = p(q(x)).
class Perm {
public:
  Perm() = default;

  /// Identity on n points.
  explicit Perm(int degree);

  /// From an image table; throws std::invalid_argument unless it is a
  /// bijection on {0,..,n-1}.
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
  struct Trusted {};
  Perm(std::vector<int> images, Trusted) : images_(std::move(images)) {}

  // construction paths whose results are bijections already
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);
  friend Perm transposition(int, int, int);

  std::vector<int> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

/// The transposition (a b) on n points.
Perm transposition(int degree, int a, int b);

/// Pointwise image of a sorted set; result is sorted again.
PointSet act_on_subset(const Perm& p, const PointSet& s);

/// Whether p maps s onto itself setwise.
bool stabilizes_subset(const Perm& p, const PointSet& s);

/// Parses cycle notation with 1-based labels, e.g. "(1 3)(2 4)".
/// "id", "identity" and "()" denote the identity.
Perm parse_cycles(const std::string& text, int degree);

/// Prints 1-based cycle notation; the identity prints as "identity".
std::string to_cycles(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace trivalent
