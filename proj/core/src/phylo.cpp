#include "trivalent/phylo.hpp"

#include <algorithm>
#include <cctype>
#include <stack>
#include <stdexcept>

namespace trivalent {

void check_phylo(const PhyloTree& t) {
  const int m = t.node_count();
  if (m == 0 || t.root < 0 || t.root >= m || t.parent[t.root] != -1)
    throw std::invalid_argument("phylo: bad root");
  if (static_cast<int>(t.children.size()) != m)
    throw std::invalid_argument("phylo: children table size mismatch");

  int roots = 0;
  for (int v = 0; v < m; ++v) {
    if (t.parent[v] < 0) {
      ++roots;
      continue;
    }
    const auto& siblings = t.children[t.parent[v]];
    if (std::find(siblings.begin(), siblings.end(), v) == siblings.end())
      throw std::invalid_argument("phylo: parent/children tables disagree");
  }
  if (roots != 1) throw std::invalid_argument("phylo: multiple roots");

  // reachability doubles as the acyclicity check
  std::vector<char> seen(m, 0);
  std::stack<int> stack;
  stack.push(t.root);
  seen[t.root] = 1;
  int visited = 0;
  while (!stack.empty()) {
    const int v = stack.top();
    stack.pop();
    ++visited;
    for (int c : t.children[v]) {
      if (seen[c]) throw std::invalid_argument("phylo: cycle");
      seen[c] = 1;
      stack.push(c);
    }
  }
  if (visited != m) throw std::invalid_argument("phylo: not connected");

  std::vector<char> labeled(m, 0);
  for (const auto& [taxon, leaf] : t.leaf_of_taxon) {
    if (leaf < 0 || leaf >= m || !t.is_leaf(leaf))
      throw std::invalid_argument("phylo: taxon on a non-leaf");
    if (labeled[leaf])
      throw std::invalid_argument("phylo: leaf labeled twice");
    labeled[leaf] = 1;
  }
  for (int v = 0; v < m; ++v)
    if (t.is_leaf(v) && !labeled[v])
      throw std::invalid_argument("phylo: unlabeled leaf");
}

std::optional<std::vector<int>> phylo_isomorphic(const PhyloTree& t1,
                                                 const PhyloTree& t2) {
  const int m = t1.node_count();
  if (m == 0 || t1.root < 0 || t1.root >= m)
    throw std::invalid_argument("phylo_isomorphic: malformed first tree");

  std::vector<int> phi(m, -1);

  // anchor the leaves in one pass over both taxon tables, which iterate in
  // the same sorted order
  {
    auto it1 = t1.leaf_of_taxon.begin();
    auto it2 = t2.leaf_of_taxon.begin();
    for (; it1 != t1.leaf_of_taxon.end() && it2 != t2.leaf_of_taxon.end();
         ++it1, ++it2) {
      if (it1->first != it2->first)
        throw std::invalid_argument("phylo_isomorphic: taxa sets differ");
      if (it1->second < 0 || it1->second >= m || it2->second < 0 ||
          it2->second >= t2.node_count())
        throw std::invalid_argument("phylo_isomorphic: taxon off the tree");
      phi[it1->second] = it2->second;
    }
    if (it1 != t1.leaf_of_taxon.end() || it2 != t2.leaf_of_taxon.end())
      throw std::invalid_argument("phylo_isomorphic: taxa sets differ");
  }

  if (t2.node_count() != m) return std::nullopt;

  // children of t1 in compressed form, derived from the flat parent table;
  // the mapping is forced by the leaf anchors, so child order is immaterial
  std::vector<int> offset(m + 1, 0);
  for (int v = 0; v < m; ++v) {
    const int p = t1.parent[v];
    if (p < -1 || p >= m)
      throw std::invalid_argument("phylo_isomorphic: parent out of range");
    if (p >= 0) ++offset[p + 1];
  }
  for (int v = 0; v < m; ++v) offset[v + 1] += offset[v];
  std::vector<int> slot = offset;
  std::vector<int> flat(m - 1 >= 0 ? m - 1 : 0);
  for (int v = 0; v < m; ++v)
    if (t1.parent[v] >= 0) flat[slot[t1.parent[v]]++] = v;

  // bottom-up order as a reversed preorder over the compressed children
  std::vector<int> order;
  order.reserve(m);
  std::vector<int> stack{t1.root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int k = offset[v]; k < offset[v + 1]; ++k) stack.push_back(flat[k]);
  }
  if (static_cast<int>(order.size()) != m)
    return std::nullopt;  // unreachable nodes: not a tree rooted there

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int w = *it;
    if (offset[w] == offset[w + 1]) continue;  // leaf
    if (phi[w] < 0) {
      const int v = flat[offset[w]];
      if (phi[v] < 0 || t2.parent[phi[v]] < 0) return std::nullopt;
      phi[w] = t2.parent[phi[v]];
    }
    for (int k = offset[w]; k < offset[w + 1]; ++k) {
      const int v = flat[k];
      if (phi[v] < 0 || t2.parent[phi[v]] != phi[w]) return std::nullopt;
    }
  }

  // the parent constraints force a bijection onto t2 rooted at its root
  std::vector<char> hit(m, 0);
  for (int image : phi) {
    if (image < 0 || hit[image]) return std::nullopt;
    hit[image] = 1;
  }
  if (phi[t1.root] != t2.root) return std::nullopt;
  return phi;
}

namespace {

struct NewickParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit NewickParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool label_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.';
  }

  std::string read_label() {
    skip_ws();
    std::string label;
    while (pos < text.size() && label_char(text[pos])) label += text[pos++];
    return label;
  }

  int parse_node(PhyloTree* tree, int parent) {
    skip_ws();
    const int id = tree->node_count();
    tree->parent.push_back(parent);
    tree->children.emplace_back();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        const int child = parse_node(tree, id);
        tree->children[id].push_back(child);
        skip_ws();
        if (pos >= text.size())
          throw std::invalid_argument("newick: unbalanced parentheses");
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        throw std::invalid_argument("newick: expected ',' or ')'");
      }
      read_label();  // interior labels are ignored
    } else {
      const std::string label = read_label();
      if (label.empty())
        throw std::invalid_argument("newick: missing leaf label");
      if (!tree->leaf_of_taxon.emplace(label, id).second)
        throw std::invalid_argument("newick: duplicate taxon '" + label + "'");
    }
    return id;
  }
};

}  // namespace

PhyloTree parse_newick(const std::string& text) {
  PhyloTree tree;
  NewickParser parser(text);
  tree.root = parser.parse_node(&tree, -1);
  parser.skip_ws();
  if (parser.pos < text.size() && text[parser.pos] == ';') ++parser.pos;
  parser.skip_ws();
  if (parser.pos != text.size())
    throw std::invalid_argument("newick: trailing characters");
  check_phylo(tree);
  return tree;
}

}  // namespace trivalent
