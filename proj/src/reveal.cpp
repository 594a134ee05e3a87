#include "vantage/reveal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace vantage {

int EdgeMask::count() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

std::vector<int> EdgeMask::to_sorted_ids() const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    while (w) {
      int b = std::countr_zero(w);
      ids.push_back(static_cast<int>(i) * 64 + b);
      w &= w - 1;
    }
  }
  return ids;
}

bool EdgeMask::contains(const EdgeMask& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (o.bits_[i] & ~bits_[i]) return false;
  }
  return true;
}

int EdgeMask::count_missing_from(const EdgeMask& o) const {
  int total = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    total += std::popcount(o.bits_[i] & ~bits_[i]);
  }
  return total;
}

namespace {

std::vector<int> normalize_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

EdgeMask reveal_mask_from_tree(const ShortestPathTree& tree, const CapacityAssignment& c,
                               int edge_count) {
  EdgeMask mask(edge_count);
  // DFS carrying the running prefix minimum rank.
  std::vector<std::pair<int, int>> stack{{tree.root, std::numeric_limits<int>::max()}};
  while (!stack.empty()) {
    auto [v, prefix_min] = stack.back();
    stack.pop_back();
    for (int child : tree.children[static_cast<std::size_t>(v)]) {
      int e = tree.parent_edge[static_cast<std::size_t>(child)];
      int r = c.rank[static_cast<std::size_t>(e)];
      if (r < prefix_min) mask.set(e);
      stack.emplace_back(child, std::min(prefix_min, r));
    }
  }
  return mask;
}

std::vector<int> revealed_from_tree(const ShortestPathTree& tree,
                                    const CapacityAssignment& c) {
  return reveal_mask_from_tree(tree, c, c.edge_count()).to_sorted_ids();
}

RevealReport revealed_edges_with_trees(const WeightedGraph& g,
                                       const std::vector<int>& s_set,
                                       const std::vector<const ShortestPathTree*>& trees,
                                       const CapacityAssignment& c) {
  if (s_set.empty()) throw std::invalid_argument("empty vantage set");
  RevealReport report;
  report.vantage_points = s_set;
  EdgeMask all(g.edge_count());
  for (std::size_t i = 0; i < s_set.size(); ++i) {
    EdgeMask mask = reveal_mask_from_tree(*trees[i], c, g.edge_count());
    all |= mask;
    report.per_vantage[s_set[i]] = mask.to_sorted_ids();
  }
  report.revealed = all.to_sorted_ids();
  return report;
}

RevealReport revealed_edges(const WeightedGraph& g, const std::vector<int>& s_set,
                            const CapacityAssignment& c) {
  std::vector<int> points = normalize_set(s_set);
  std::vector<ShortestPathTree> trees;
  trees.reserve(points.size());
  for (int s : points) trees.push_back(shortest_path_tree(g, s));
  std::vector<const ShortestPathTree*> refs;
  for (const auto& t : trees) refs.push_back(&t);
  return revealed_edges_with_trees(g, points, refs, c);
}

std::vector<int> revealed_edges_brute_force(const WeightedGraph& g,
                                            const std::vector<int>& s_set,
                                            const CapacityAssignment& c) {
  if (s_set.empty()) throw std::invalid_argument("empty vantage set");
  EdgeMask mask(g.edge_count());
  for (int s : normalize_set(s_set)) {
    ShortestPathTree tree = shortest_path_tree(g, s);
    for (int t = 0; t < g.vertex_count(); ++t) {
      if (t == s || !tree.reached[static_cast<std::size_t>(t)]) continue;
      // Strict minimum of the s->t path, if any.
      std::vector<int> path = tree.path_edges_from_root(t);
      int best = -1;
      bool strict = false;
      for (int e : path) {
        int r = c.rank[static_cast<std::size_t>(e)];
        if (best == -1 || r < c.rank[static_cast<std::size_t>(best)]) {
          best = e;
          strict = true;
        } else if (r == c.rank[static_cast<std::size_t>(best)]) {
          strict = false;  // unreachable for bijective ranks; kept for safety
        }
      }
      if (best != -1 && strict) mask.set(best);
    }
  }
  return mask.to_sorted_ids();
}

std::vector<EdgeMask> vantage_reveal_masks(const WeightedGraph& g,
                                           const CapacityAssignment& c) {
  std::vector<EdgeMask> masks;
  masks.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    masks.push_back(reveal_mask_from_tree(shortest_path_tree(g, v), c, g.edge_count()));
  }
  return masks;
}

BruteForceOptResult brute_force_opt(const WeightedGraph& g, const CapacityAssignment& c,
                                    int k, std::uint64_t subset_budget) {
  const int n = g.vertex_count();
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  BigInt subsets = binomial(n, k);
  if (subsets > BigInt(static_cast<unsigned long>(subset_budget))) {
    throw std::runtime_error("brute_force_opt: enumeration budget exceeded; C(n,k) = " +
                             subsets.get_str() + " subsets required");
  }
  std::vector<EdgeMask> masks = vantage_reveal_masks(g, c);

  BruteForceOptResult result;
  if (k == 0) return result;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  bool first = true;
  while (true) {
    EdgeMask u(g.edge_count());
    for (int v : pick) u |= masks[static_cast<std::size_t>(v)];
    int count = u.count();
    // Lexicographic enumeration order: strict improvement keeps the
    // lexicographically smallest maximizer.
    if (first || count > result.opt_count) {
      result.opt_count = count;
      result.best_set = pick;
      first = false;
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return result;
}

}  // namespace vantage
