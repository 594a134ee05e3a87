#include "vantage/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vantage/prng.hpp"
#include "vantage/spt.hpp"

namespace vantage {

namespace {

// Smallest integer g with g * g * k >= n, i.e. ceil(sqrt(n/k)).
int ceil_sqrt_ratio(int n, int k) {
  int g = static_cast<int>(std::sqrt(static_cast<double>(n) / k));
  while (g > 1 && static_cast<long long>(g - 1) * (g - 1) * k >= n) --g;
  while (static_cast<long long>(g) * g * k < n) ++g;
  return std::max(g, 1);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<int> pad_with_lowest_ids(std::vector<int> points, int target, int n) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int p : points) used[static_cast<std::size_t>(p)] = true;
  for (int v = 0; v < n && static_cast<int>(points.size()) < target; ++v) {
    if (!used[static_cast<std::size_t>(v)]) points.push_back(v);
  }
  std::sort(points.begin(), points.end());
  return points;
}

struct RootedTree {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<std::vector<int>> children;
  std::vector<int> bfs_order;
};

RootedTree root_tree(const WeightedGraph& g, int root) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  RootedTree t;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  t.children.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[static_cast<std::size_t>(root)] = true;
  t.bfs_order.push_back(root);
  for (std::size_t head = 0; head < t.bfs_order.size(); ++head) {
    int v = t.bfs_order[head];
    for (int e : g.incident(v)) {
      int w = g.edge(e).other(v);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      t.parent[static_cast<std::size_t>(w)] = v;
      t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
      t.children[static_cast<std::size_t>(v)].push_back(w);
      t.bfs_order.push_back(w);
    }
  }
  return t;
}

}  // namespace

bool is_tree(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (g.edge_count() != n - 1) return false;
  return static_cast<int>(root_tree(g, 0).bfs_order.size()) == n;
}

TreeCover tree_cover(const WeightedGraph& tree, int root, int gamma) {
  const int n = tree.vertex_count();
  if (!is_tree(tree)) throw std::invalid_argument("tree_cover: input is not a tree");
  if (!tree.valid_vertex(root)) throw std::invalid_argument("tree_cover: invalid root");
  if (gamma < 1 || gamma > n) throw std::invalid_argument("tree_cover: gamma out of range");

  RootedTree t = root_tree(tree, root);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  int alive_count = n;

  TreeCover cover;
  cover.gamma = gamma;
  cover.root_used = root;

  std::vector<int> size(static_cast<std::size_t>(n));
  while (alive_count > gamma) {
    // Inclusive descendant counts of the remaining tree (removals always
    // take whole subtrees, so what remains is a tree containing root).
    for (auto it = t.bfs_order.rbegin(); it != t.bfs_order.rend(); ++it) {
      std::size_t vi = static_cast<std::size_t>(*it);
      if (!alive[vi]) continue;
      size[vi] = 1;
      for (int c : t.children[vi]) {
        if (alive[static_cast<std::size_t>(c)]) size[vi] += size[static_cast<std::size_t>(c)];
      }
    }
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      std::size_t vi = static_cast<std::size_t>(v);
      if (!alive[vi] || size[vi] < gamma) continue;
      bool all_children_small = true;
      for (int c : t.children[vi]) {
        if (alive[static_cast<std::size_t>(c)] && size[static_cast<std::size_t>(c)] >= gamma) {
          all_children_small = false;
          break;
        }
      }
      if (!all_children_small) continue;
      if (pick == -1 || t.depth[vi] > t.depth[static_cast<std::size_t>(pick)]) pick = v;
    }
    if (pick == -1) throw std::logic_error("tree_cover: no candidate despite remainder > gamma");
    cover.members.push_back(pick);
    // Remove pick's remaining subtree.
    std::vector<int> stack{pick};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      alive[static_cast<std::size_t>(v)] = false;
      --alive_count;
      for (int c : t.children[static_cast<std::size_t>(v)]) {
        if (alive[static_cast<std::size_t>(c)]) stack.push_back(c);
      }
    }
  }
  return cover;
}

TreePointsResult adaptive_tree_deterministic(const WeightedGraph& tree, int k, int alpha) {
  const int n = tree.vertex_count();
  if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  long long target = static_cast<long long>(alpha) * k;
  if (target > n) throw std::invalid_argument("alpha * k exceeds the vertex count");

  TreePointsResult result;
  if (static_cast<long long>(alpha) * alpha * k > n) {
    result.warning = "alpha exceeds sqrt(n/k); the tradeoff guarantee does not apply";
  }
  result.gamma = ceil_div(n, static_cast<int>(target));
  TreeCover cover = tree_cover(tree, 0, result.gamma);
  result.points = pad_with_lowest_ids(cover.members, static_cast<int>(target), n);
  return result;
}

TreePointsResult adaptive_tree_randomized(const WeightedGraph& tree, int k, int alpha,
                                          std::uint64_t seed) {
  const int n = tree.vertex_count();
  if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  long long target = static_cast<long long>(alpha) * k;
  if (target > n) throw std::invalid_argument("alpha * k exceeds the vertex count");

  TreePointsResult result;
  if (static_cast<long long>(alpha) * alpha * k > n) {
    result.warning = "alpha exceeds sqrt(n/k); the tradeoff guarantee does not apply";
  }
  result.gamma = ceil_sqrt_ratio(n, k);
  TreeCover cover = tree_cover(tree, 0, result.gamma);
  std::vector<int> members = cover.members;
  std::sort(members.begin(), members.end());
  Prng rng(seed);
  std::vector<int> sampled =
      rng.sample_without_replacement(members, static_cast<int>(target));
  result.points = pad_with_lowest_ids(std::move(sampled), static_cast<int>(target), n);
  return result;
}

int RDivision::max_piece_size() const {
  std::size_t best = 0;
  for (const auto& p : pieces) best = std::max(best, p.size());
  return static_cast<int>(best);
}

int RDivision::max_boundary_size() const {
  std::size_t best = 0;
  for (const auto& b : boundary) best = std::max(best, b.size());
  return static_cast<int>(best);
}

namespace {

// Boundary: vertices with a graph neighbor assigned to another piece.
void fill_boundaries(const WeightedGraph& g, const std::vector<int>& piece_of,
                     RDivision& division) {
  division.boundary.assign(division.pieces.size(), {});
  for (std::size_t p = 0; p < division.pieces.size(); ++p) {
    for (int v : division.pieces[p]) {
      bool edge_out = false;
      for (int e : g.incident(v)) {
        if (piece_of[static_cast<std::size_t>(g.edge(e).other(v))] != static_cast<int>(p)) {
          edge_out = true;
          break;
        }
      }
      if (edge_out) division.boundary[p].push_back(v);
    }
  }
}

bool is_declared_grid(const WeightedGraph& g, int width, int height) {
  if (width < 1 || height < 1) return false;
  if (g.vertex_count() != width * height) return false;
  if (g.edge_count() != width * (height - 1) + height * (width - 1)) return false;
  for (const Edge& e : g.edges()) {
    int ru = e.u / width, cu = e.u % width;
    int rv = e.v / width, cv = e.v % width;
    if (std::abs(ru - rv) + std::abs(cu - cv) != 1) return false;
  }
  return true;
}

}  // namespace

RDivision grid_r_division(const WeightedGraph& g, int width, int height, int r) {
  if (!is_declared_grid(g, width, height)) {
    throw std::invalid_argument(
        "graph is not the declared grid; supply an external division via load_r_division");
  }
  if (r < 1) throw std::invalid_argument("r must be positive");
  int side = 1;
  while (side * side < r) ++side;  // ceil(sqrt(r))
  const int blocks_x = ceil_div(width, side);
  const int blocks_y = ceil_div(height, side);

  RDivision division;
  division.r = r;
  division.pieces.assign(static_cast<std::size_t>(blocks_x * blocks_y), {});
  std::vector<int> piece_of(static_cast<std::size_t>(g.vertex_count()));
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      int p = (row / side) * blocks_x + col / side;
      piece_of[static_cast<std::size_t>(row * width + col)] = p;
      division.pieces[static_cast<std::size_t>(p)].push_back(row * width + col);
    }
  }
  fill_boundaries(g, piece_of, division);
  return division;
}

RDivision load_r_division(const WeightedGraph& g, std::istream& in) {
  const int n = g.vertex_count();
  std::vector<int> piece_raw(static_cast<std::size_t>(n), -1);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    int v, p;
    if (!(row >> v)) continue;
    if (!(row >> p) || p < 0) {
      throw std::invalid_argument("division file line " + std::to_string(line_no) +
                                  ": expected 'vertex_id piece_id'");
    }
    if (v < 0 || v >= n) {
      throw std::invalid_argument("division file line " + std::to_string(line_no) +
                                  ": vertex id out of range");
    }
    if (piece_raw[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("division file line " + std::to_string(line_no) +
                                  ": vertex listed twice");
    }
    piece_raw[static_cast<std::size_t>(v)] = p;
  }
  for (int v = 0; v < n; ++v) {
    if (piece_raw[static_cast<std::size_t>(v)] == -1) {
      throw std::invalid_argument("division file: vertex " + std::to_string(v) +
                                  " has no piece");
    }
  }
  // Compress piece ids in order of first appearance.
  std::map<int, int> compact;
  std::vector<int> piece_of(static_cast<std::size_t>(n));
  RDivision division;
  for (int v = 0; v < n; ++v) {
    int raw = piece_raw[static_cast<std::size_t>(v)];
    auto [it, fresh] = compact.emplace(raw, static_cast<int>(division.pieces.size()));
    if (fresh) division.pieces.emplace_back();
    piece_of[static_cast<std::size_t>(v)] = it->second;
    division.pieces[static_cast<std::size_t>(it->second)].push_back(v);
  }
  fill_boundaries(g, piece_of, division);
  division.r = division.max_piece_size();
  return division;
}

RDivision load_r_division_file(const WeightedGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open division file: " + path);
  return load_r_division(g, in);
}

std::vector<int> planar_adaptive(const WeightedGraph& g, const RDivision& division, int k) {
  std::vector<int> points;
  for (const auto& b : division.boundary) points.insert(points.end(), b.begin(), b.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) {
    // Single-piece division: no boundary to stand on.
    for (int v = 0; v < std::min(k, g.vertex_count()); ++v) points.push_back(v);
  }
  return points;
}

}  // namespace vantage
