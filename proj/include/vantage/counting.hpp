#pragma once
// Exact value oracle for the expected number of reveals under a uniformly
// random capacity permutation. Per edge e = (u, v):
//   1. keep only essential vantage points: those whose probe path crosses
//      e and has no other vantage point between them and e,
//   2. take the union of their approach paths plus e (a tree), and
//      re-root it on edges so nodes stand for edges ("edge tree"),
//   3. count bijective labellings of the edge tree in which the root
//      carries the minimum label of some root-to-leaf path,
//   4. divide by |nodes|!: under a uniform permutation only the relative
//      order of the tree's own edge ranks matters.
// An edge probed directly by an endpoint vantage point is revealed with
// certainty; an edge on no probe path is never revealed.

#include <cstddef>
#include <memory>
#include <vector>

#include "vantage/graph.hpp"
#include "vantage/rational.hpp"
#include "vantage/spt.hpp"

namespace vantage {

// Rooted tree whose nodes stand for edges of the underlying graph.
// Node 0 is the root.
struct EdgeTree {
  std::vector<int> edge_id;  // payload; -1 allowed for synthetic trees in tests
  std::vector<int> parent;   // -1 for the root
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(parent.size()); }
  bool is_leaf(int node) const { return children[static_cast<std::size_t>(node)].empty(); }

  // Validates: parent[0] == -1, every other node's parent precedes it in
  // a single connected rooted tree.
  static EdgeTree from_parents(std::vector<int> parents, std::vector<int> payload);
};

enum class EdgeTreeKind {
  kTree,            // proper edge tree, probability from counting
  kIncidentVantage, // an endpoint vantage point probes along e: certainty
  kNoEssential,     // no probe path crosses e: never revealed
};

struct EdgeTreeResult {
  EdgeTreeKind kind = EdgeTreeKind::kNoEssential;
  EdgeTree tree;  // meaningful iff kind == kTree
};

// coeff[t] = number of black/white colorings with exactly t black nodes
// and no all-white root-to-leaf path.
struct CountPolynomial {
  std::vector<BigInt> coeff;

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
};

struct CountingStats {
  std::size_t polynomial_multiplications = 0;
};

CountPolynomial count_black_white_colorings(const EdgeTree& t,
                                            CountingStats* stats = nullptr);

// Bijective labellings of the nodes with 1..size in which the root's
// label is the minimum along some root-to-leaf path.
BigInt count_good_labellings(const EdgeTree& t);

// Lazily built per-root shortest path trees. Not synchronized: use one
// cache per task when running concurrently.
class SptCache {
 public:
  explicit SptCache(const WeightedGraph& g) : g_(&g) {
    trees_.resize(static_cast<std::size_t>(g.vertex_count()));
  }
  const WeightedGraph& graph() const { return *g_; }
  const ShortestPathTree& tree(int root) const;

 private:
  const WeightedGraph* g_;
  mutable std::vector<std::unique_ptr<ShortestPathTree>> trees_;
};

// Vantage points that survive domination filtering for edge_id: they
// cross the edge and no other vantage point sits on their approach path.
std::vector<int> essential_vantage_points(const WeightedGraph& g,
                                          const std::vector<int>& s_set, int edge_id,
                                          const SptCache& cache);
std::vector<int> essential_vantage_points(const WeightedGraph& g,
                                          const std::vector<int>& s_set, int edge_id);

EdgeTreeResult build_edge_tree(const WeightedGraph& g, const std::vector<int>& s_set,
                               int edge_id, const SptCache& cache);
EdgeTreeResult build_edge_tree(const WeightedGraph& g, const std::vector<int>& s_set,
                               int edge_id);

// Exact Pr[edge_id revealed by s_set] in [0, 1].
Rational reveal_probability(const WeightedGraph& g, const std::vector<int>& s_set,
                            int edge_id, const SptCache& cache, FactorialTable& factorials);
Rational reveal_probability(const WeightedGraph& g, const std::vector<int>& s_set,
                            int edge_id);

// f(S): exact expected number of revealed edges, the sum of the per-edge
// probabilities.
Rational expected_reveals(const WeightedGraph& g, const std::vector<int>& s_set,
                          const SptCache& cache);
Rational expected_reveals(const WeightedGraph& g, const std::vector<int>& s_set);

}  // namespace vantage
