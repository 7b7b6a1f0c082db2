#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trivalent/autengine.hpp"
#include "trivalent/graph.hpp"
#include "trivalent/iso.hpp"
#include "trivalent/oracle.hpp"
#include "trivalent/phylo.hpp"
#include "trivalent/random_graphs.hpp"
#include "trivalent/sift_chain.hpp"

namespace {

using namespace trivalent;

constexpr int kExitIsomorphic = 0;
constexpr int kExitNotIsomorphic = 1;
constexpr int kExitInputError = 2;

// cycle notation over the external labels of a named graph
std::string labeled_cycles(const Perm& p, const std::vector<long>& labels) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(labels[x]);
      seen[x] = 1;
      x = p(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "identity" : out;
}

std::string order_string(const SiftChain& chain) {
  try {
    return std::to_string(chain.order());
  } catch (const std::overflow_error&) {
    return "2^" + std::to_string(chain.order_pow2_exponent());
  }
}

int run_iso(const std::string& file1, const std::string& file2,
            bool print_mapping) {
  const NamedGraph a = read_edge_list_file(file1);
  const NamedGraph b = read_edge_list_file(file2);
  const IsoResult result = isomorphic(a.graph, b.graph,
                                      {.want_mapping = print_mapping});
  if (result.isomorphic && print_mapping) {
    for (int v = 0; v < a.graph.vertex_count(); ++v)
      std::cout << a.label_of(v) << " --> " << b.label_of((*result.mapping)[v])
                << '\n';
  }
  std::cout << (result.isomorphic ? "True" : "False") << '\n';
  return result.isomorphic ? kExitIsomorphic : kExitNotIsomorphic;
}

int run_aut(const std::string& file, long label_u, long label_v) {
  const NamedGraph g = read_edge_list_file(file);
  const Edge e{g.vertex_of(label_u), g.vertex_of(label_v)};
  if (!g.graph.has_edge(e.first, e.second))
    throw std::invalid_argument("aut: --edge is not an edge of the graph");
  const AutEResult result = aut_e(g.graph, e);
  if (result.generators.empty()) {
    std::cout << "identity\n";
  } else {
    for (const Perm& gen : result.generators)
      std::cout << labeled_cycles(gen, g.labels) << '\n';
  }
  SiftChain chain =
      close_generators(result.generators, g.graph.vertex_count());
  std::cout << "order " << order_string(chain) << '\n';
  return 0;
}

PhyloTree read_newick_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_newick(text);
}

int run_phylo(const std::string& file1, const std::string& file2) {
  const PhyloTree t1 = read_newick_file(file1);
  const PhyloTree t2 = read_newick_file(file2);
  const auto phi = phylo_isomorphic(t1, t2);
  if (phi) {
    for (int v = 0; v < t1.node_count(); ++v)
      std::cout << v << " --> " << (*phi)[v] << '\n';
  }
  std::cout << (phi ? "True" : "False") << '\n';
  return phi ? kExitIsomorphic : kExitNotIsomorphic;
}

struct BenchRow {
  int n;
  std::string mode;
  std::uint64_t seed;
  int rep;
  double seconds;
  bool verdict;
};

BenchRow bench_one(int n, const std::string& mode, std::uint64_t base_seed,
                   int rep) {
  Rng rng(base_seed * 1000003ULL + static_cast<std::uint64_t>(n) * 101ULL +
          static_cast<std::uint64_t>(rep));
  const Graph g1 = random_cubic_graph(n, rng);
  Graph g2;
  if (mode == "isomorphic") {
    g2 = relabel(g1, random_perm(n, rng));
  } else if (mode == "random") {
    g2 = random_cubic_graph(n, rng);
  } else {  // semirandom: same degree profile, the last vertex drawn at random
    const int roll = rng.uniform(3);
    if (roll == 0) {
      g2 = relabel(g1, random_perm(n, rng));
    } else {
      std::vector<int> degrees(n, 3);
      degrees[n - 1] = roll == 1 ? 1 : 3;  // parity forces an odd last degree
      g2 = random_graph_with_degrees(degrees, rng);
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const IsoResult result = isomorphic(g1, g2);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {n, mode, base_seed, rep, seconds, result.isomorphic};
}

int run_bench(const std::vector<int>& sizes, const std::string& mode,
              std::uint64_t seed, int reps) {
  for (int n : sizes)
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument(
          "bench: sizes must be even integers of at least 4");
  if (reps < 1) throw std::invalid_argument("bench: reps must be positive");

  std::cout << "n,mode,seed,rep,seconds,verdict\n";
  for (int n : sizes) {
    for (int rep = 0; rep < reps; ++rep) {
      const BenchRow row = bench_one(n, mode, seed, rep);
      std::cout << row.n << ',' << row.mode << ',' << row.seed << ','
                << row.rep << ',' << row.seconds << ','
                << (row.verdict ? "True" : "False") << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomorphism of connected graphs with maximum degree 3"};
  app.require_subcommand(1);

  std::string file1, file2;
  bool print_mapping = false;
  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two graphs");
  iso_cmd->add_option("file1", file1, "edge-list file")->required();
  iso_cmd->add_option("file2", file2, "edge-list file")->required();
  iso_cmd->add_flag("--mapping", print_mapping, "print one 'u --> v' line per vertex");

  std::string aut_file;
  std::vector<long> edge_labels;
  auto* aut_cmd =
      app.add_subcommand("aut", "generators of the automorphisms fixing an edge");
  aut_cmd->add_option("file", aut_file, "edge-list file")->required();
  aut_cmd->add_option("--edge", edge_labels, "the two labels of the fixed edge")
      ->required()
      ->expected(2);

  std::string tree1, tree2;
  auto* phylo_cmd =
      app.add_subcommand("phylo", "decide isomorphism of two phylogenetic trees");
  phylo_cmd->add_option("file1", tree1, "newick file")->required();
  phylo_cmd->add_option("file2", tree2, "newick file")->required();

  std::vector<int> sizes;
  std::string mode = "random";
  std::uint64_t seed = 1;
  int reps = 1;
  auto* bench_cmd = app.add_subcommand("bench", "timed isomorphism runs as CSV");
  bench_cmd->add_option("--sizes", sizes, "graph sizes (even, >= 4)")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--mode", mode, "random | semirandom | isomorphic")
      ->check(CLI::IsMember({"random", "semirandom", "isomorphic"}));
  bench_cmd->add_option("--seed", seed, "base seed");
  bench_cmd->add_option("--reps", reps, "repetitions per size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*iso_cmd) return run_iso(file1, file2, print_mapping);
    if (*aut_cmd) return run_aut(aut_file, edge_labels[0], edge_labels[1]);
    if (*phylo_cmd) return run_phylo(tree1, tree2);
    if (*bench_cmd) return run_bench(sizes, mode, seed, reps);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
