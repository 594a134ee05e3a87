#include "vantage/instances.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "vantage/prng.hpp"
#include "vantage/reveal.hpp"

namespace vantage {

namespace {

WeightedGraph disjoint_unit_paths(int path_count, int path_len) {
  std::vector<EdgeSpec> edges;
  for (int p = 0; p < path_count; ++p) {
    for (int j = 0; j + 1 < path_len; ++j) {
      edges.push_back(EdgeSpec{p * path_len + j, p * path_len + j + 1, Rational(1)});
    }
  }
  return build_graph(path_count * path_len, edges);
}

int floor_sqrt(long long x) {
  int r = static_cast<int>(std::max(0.0, std::floor(std::sqrt(static_cast<double>(x)))));
  while (static_cast<long long>(r + 1) * (r + 1) <= x) ++r;
  while (static_cast<long long>(r) * r > x) --r;
  return r;
}

}  // namespace

InstanceBundle gen_path_family(int n, int k) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  const int path_len = n / k;
  InstanceBundle bundle;
  bundle.graph = disjoint_unit_paths(k, path_len);
  bundle.metadata = {{"generator", "pathfamily"},
                     {"params", {{"n", n}, {"k", k}}},
                     {"path_count", k},
                     {"path_len", path_len},
                     {"n_used", k * path_len}};
  return bundle;
}

InstanceBundle gen_randomized_lb_instance(int n, int k, std::uint64_t seed) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  const int path_len = std::max(2, floor_sqrt(n / k));       // sqrt(n/k) vertices per path
  const int path_count = std::max(k, floor_sqrt(static_cast<long long>(n) * k));
  const int edges_per_path = path_len - 1;

  InstanceBundle bundle;
  bundle.graph = disjoint_unit_paths(path_count, path_len);
  Prng rng(seed);

  // k good paths, sampled without replacement.
  std::vector<int> all_paths(static_cast<std::size_t>(path_count));
  std::iota(all_paths.begin(), all_paths.end(), 0);
  std::vector<int> good = rng.sample_without_replacement(all_paths, k);
  std::sort(good.begin(), good.end());
  std::vector<bool> is_good(static_cast<std::size_t>(path_count), false);
  for (int p : good) is_good[static_cast<std::size_t>(p)] = true;

  // Disjoint per-path rank blocks keep the global assignment a bijection;
  // within a path only relative order matters.
  std::vector<int> ranks(static_cast<std::size_t>(path_count * edges_per_path), 0);
  for (int p = 0; p < path_count; ++p) {
    const int lo = p * edges_per_path + 1;  // block [lo, lo + edges_per_path)
    std::vector<int> block(static_cast<std::size_t>(edges_per_path));
    std::iota(block.begin(), block.end(), lo);
    if (is_good[static_cast<std::size_t>(p)]) {
      // Decreasing capacities away from the left endpoint: edge j gets the
      // block's (j+1)-th largest rank.
      for (int j = 0; j < edges_per_path; ++j) {
        ranks[static_cast<std::size_t>(p * edges_per_path + j)] =
            lo + edges_per_path - 1 - j;
      }
    } else {
      rng.shuffle(block);
      for (int j = 0; j < edges_per_path; ++j) {
        ranks[static_cast<std::size_t>(p * edges_per_path + j)] = block[static_cast<std::size_t>(j)];
      }
    }
  }
  bundle.capacities = make_capacity(std::move(ranks));

  std::vector<int> witness;
  for (int p : good) witness.push_back(p * path_len);
  const int claimed = k * edges_per_path;
  RevealReport audit = revealed_edges(bundle.graph, witness, *bundle.capacities);
  if (static_cast<int>(audit.revealed.size()) < claimed) {
    throw std::logic_error("randomized instance: planted witness audit failed");
  }

  bundle.metadata = {{"generator", "randlb"},
                     {"params", {{"n", n}, {"k", k}}},
                     {"seed", seed},
                     {"path_count", path_count},
                     {"path_len", path_len},
                     {"n_used", path_count * path_len},
                     {"planted",
                      {{"good_paths", good},
                       {"witness", witness},
                       {"claimed_reveals", claimed}}}};
  return bundle;
}

ShortestPathTree torus_canonical_spt(const WeightedGraph& torus, int side, int root) {
  const int n = side * side;
  if (torus.vertex_count() != n) throw std::invalid_argument("not a torus of that side");
  auto vertex_at = [side](int row, int col) {
    return ((row % side + side) % side) * side + ((col % side + side) % side);
  };
  ShortestPathTree t;
  t.root = root;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  t.parent_edge.assign(static_cast<std::size_t>(n), -1);
  t.reached.assign(static_cast<std::size_t>(n), true);
  t.distance.assign(static_cast<std::size_t>(n), Rational(0));
  t.children.assign(static_cast<std::size_t>(n), {});

  const int root_row = root / side;
  const int root_col = root % side;
  const int fwd = side / 2;           // right / down arm length
  const int bwd = side - 1 - fwd;     // left / up arm length

  auto attach = [&](int child, int parent, int dist) {
    std::size_t ci = static_cast<std::size_t>(child);
    t.parent[ci] = parent;
    t.parent_edge[ci] = torus.edge_between(parent, child);
    if (t.parent_edge[ci] == -1) throw std::logic_error("torus edge lookup failed");
    t.distance[ci] = Rational(dist);
  };

  // Root's row: two horizontal arms.
  for (int i = 1; i <= fwd; ++i) {
    attach(vertex_at(root_row, root_col + i), vertex_at(root_row, root_col + i - 1), i);
  }
  for (int i = 1; i <= bwd; ++i) {
    attach(vertex_at(root_row, root_col - i), vertex_at(root_row, root_col - i + 1), i);
  }
  // Each column: two vertical arms anchored at the root's row.
  for (int c = 0; c < side; ++c) {
    int anchor_dist = std::min((c - root_col + side) % side, (root_col - c + side) % side);
    for (int i = 1; i <= fwd; ++i) {
      attach(vertex_at(root_row + i, c), vertex_at(root_row + i - 1, c), anchor_dist + i);
    }
    for (int i = 1; i <= bwd; ++i) {
      attach(vertex_at(root_row - i, c), vertex_at(root_row - i + 1, c), anchor_dist + i);
    }
  }
  for (int v = 0; v < n; ++v) {
    int p = t.parent[static_cast<std::size_t>(v)];
    if (p != -1) t.children[static_cast<std::size_t>(p)].push_back(v);
  }
  for (auto& kids : t.children) std::sort(kids.begin(), kids.end());
  return t;
}

InstanceBundle gen_torus_instance(int side, int chosen_vertex, std::uint64_t seed) {
  if (side < 3) throw std::invalid_argument("torus side must be at least 3");
  const int n = side * side;
  if (chosen_vertex < 0 || chosen_vertex >= n) {
    throw std::invalid_argument("chosen vertex out of range");
  }
  // Right and down neighbors with wraparound; edge order fixed by vertex id.
  std::vector<EdgeSpec> edges;
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      int v = row * side + col;
      edges.push_back(EdgeSpec{v, row * side + (col + 1) % side, Rational(1)});
      edges.push_back(EdgeSpec{v, ((row + 1) % side) * side + col, Rational(1)});
    }
  }
  InstanceBundle bundle;
  bundle.graph = build_graph(n, edges);
  const int m = bundle.graph.edge_count();

  ShortestPathTree tree = torus_canonical_spt(bundle.graph, side, chosen_vertex);

  // Tree edges sorted by (layer, child id) take the top ranks, deepest last.
  std::vector<std::pair<int, int>> layered;  // (layer, child vertex)
  for (int v = 0; v < n; ++v) {
    if (tree.parent[static_cast<std::size_t>(v)] != -1) {
      layered.emplace_back(static_cast<int>(tree.distance[static_cast<std::size_t>(v)].get_d()), v);
    }
  }
  std::sort(layered.begin(), layered.end());
  std::vector<int> ranks(static_cast<std::size_t>(m), 0);
  int next_rank = m;
  for (auto [layer, v] : layered) {
    ranks[static_cast<std::size_t>(tree.parent_edge[static_cast<std::size_t>(v)])] = next_rank--;
  }
  // Remaining edges get the low ranks in seeded-random order.
  std::vector<int> rest;
  for (int e = 0; e < m; ++e) {
    if (ranks[static_cast<std::size_t>(e)] == 0) rest.push_back(e);
  }
  Prng rng(seed);
  rng.shuffle(rest);
  int low = 1;
  for (int e : rest) ranks[static_cast<std::size_t>(e)] = low++;
  bundle.capacities = make_capacity(std::move(ranks));

  const int revealed = static_cast<int>(revealed_from_tree(tree, *bundle.capacities).size());
  if (revealed != n - 1) {
    throw std::logic_error("torus instance: chosen vertex audit failed");
  }

  bundle.metadata = {{"generator", "torus"},
                     {"params", {{"side", side}, {"chosen", chosen_vertex}}},
                     {"seed", seed},
                     {"tie_break_policy", "torus-canonical: root row first, then vertical chains per column"},
                     {"planted", {{"witness", std::vector<int>{chosen_vertex}},
                                  {"claimed_reveals", n - 1}}}};
  return bundle;
}

InstanceBundle gen_vertex_cover_reduction(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges) {
  std::vector<EdgeSpec> specs;
  BigInt denom = 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    denom *= 2;  // weight of edge i: 1 + 2^-(i+1)
    specs.push_back(EdgeSpec{edges[i].first, edges[i].second,
                             make_rational(denom + 1, denom)});
  }
  InstanceBundle bundle;
  bundle.graph = build_graph(vertex_count, specs);
  if (!certify_unique_paths(bundle.graph).empty()) {
    throw std::logic_error("vertex-cover reduction: shortest paths are not unique");
  }
  bundle.metadata = {{"generator", "vcreduce"},
                     {"params", {{"n", vertex_count}, {"m", edges.size()}}}};
  return bundle;
}

InstanceBundle gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  Prng rng(seed);
  std::vector<EdgeSpec> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back(EdgeSpec{rng.index(v), v, Rational(1)});
  }
  InstanceBundle bundle;
  bundle.graph = build_graph(n, edges);
  bundle.metadata = {{"generator", "tree"}, {"params", {{"n", n}}}, {"seed", seed}};
  return bundle;
}

InstanceBundle gen_grid(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid sides must be positive");
  std::vector<EdgeSpec> edges;
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      int v = row * width + col;
      if (col + 1 < width) edges.push_back(EdgeSpec{v, v + 1, Rational(1)});
      if (row + 1 < height) edges.push_back(EdgeSpec{v, v + width, Rational(1)});
    }
  }
  InstanceBundle bundle;
  bundle.graph = build_graph(width * height, edges);
  bundle.metadata = {{"generator", "grid"},
                     {"params", {{"width", width}, {"height", height}}}};
  return bundle;
}

void save_bundle(const InstanceBundle& bundle, const std::string& directory) {
  std::filesystem::create_directories(directory);
  write_graph_file(bundle.graph, directory + "/graph.txt");
  if (bundle.capacities) {
    write_capacity_file(*bundle.capacities, directory + "/capacities.txt");
  }
  std::ofstream meta(directory + "/meta.json");
  if (!meta) throw std::invalid_argument("cannot write bundle metadata in " + directory);
  meta << bundle.metadata.dump(2) << "\n";
}

InstanceBundle load_bundle(const std::string& directory) {
  InstanceBundle bundle;
  bundle.graph = read_graph_file(directory + "/graph.txt");
  if (std::filesystem::exists(directory + "/capacities.txt")) {
    bundle.capacities =
        read_capacity_file(directory + "/capacities.txt", bundle.graph.edge_count());
  }
  std::ifstream meta(directory + "/meta.json");
  if (!meta) throw std::invalid_argument("cannot read bundle metadata in " + directory);
  bundle.metadata = nlohmann::json::parse(meta);
  return bundle;
}

}  // namespace vantage
