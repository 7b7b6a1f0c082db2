#include "trivalent/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trivalent {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x])
      throw std::invalid_argument("image table is not a bijection on 0..n-1");
    seen[x] = 1;
  }
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p(q(x));
  return Perm(std::move(images), Perm::Trusted{});
}

Perm inverse(const Perm& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p(x)] = x;
  return Perm(std::move(images), Perm::Trusted{});
}

Perm transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b)
    throw std::invalid_argument("transposition: bad points");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[a], images[b]);
  return Perm(std::move(images), Perm::Trusted{});
}

PointSet act_on_subset(const Perm& p, const PointSet& s) {
  PointSet out;
  out.reserve(s.size());
  for (int x : s) {
    if (x < 0 || x >= p.degree())
      throw std::invalid_argument("act_on_subset: point out of range");
    out.push_back(p(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool stabilizes_subset(const Perm& p, const PointSet& s) {
  return act_on_subset(p, s) == s;
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.compare(i, 2, "id") == 0 || text.compare(i, 8, "identity") == 0)
    return Perm(degree);

  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("parse_cycles: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t end;
      int label = std::stoi(text.substr(i), &end);
      i += end;
      if (label < 1 || label > degree)
        throw std::invalid_argument("parse_cycles: label out of range");
      cycle.push_back(label - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (used[from])
        throw std::invalid_argument("parse_cycles: repeated point");
      used[from] = 1;
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

std::string to_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x + 1;
      seen[x] = 1;
      x = p(x);
      first = false;
    } while (x != start);
    out << ')';
  }
  return any ? out.str() : "identity";
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = static_cast<std::size_t>(p.degree());
  for (int x : p.images())
    h = h * 1000003u + static_cast<std::size_t>(x);
  return h;
}

}  // namespace trivalent
