#pragma once
// Probe semantics: a vantage point s issues probes along its shortest
// path tree; an edge is revealed when its rank is a strict record
// (strictly below every earlier rank) on the root-to-leaf path that
// contains it. Tree edges incident to s have an empty prefix and are
// always revealed.

#include <cstdint>
#include <map>
#include <vector>

#include "vantage/capacity.hpp"
#include "vantage/graph.hpp"
#include "vantage/spt.hpp"

namespace vantage {

// Small fixed-size bitset over edge ids; cheap unions for subset sweeps.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(int edge_count)
      : bits_(static_cast<std::size_t>((edge_count + 63) / 64), 0) {}

  void set(int e) { bits_[static_cast<std::size_t>(e) >> 6] |= 1ull << (e & 63); }
  bool test(int e) const {
    return (bits_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }
  EdgeMask& operator|=(const EdgeMask& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  int count() const;
  std::vector<int> to_sorted_ids() const;
  bool contains(const EdgeMask& o) const;  // o subset of this
  int count_missing_from(const EdgeMask& o) const;  // |o \ this|

 private:
  std::vector<std::uint64_t> bits_;
};

struct RevealReport {
  std::vector<int> vantage_points;            // deduplicated, ascending
  std::vector<int> revealed;                  // union, ascending edge ids
  std::map<int, std::vector<int>> per_vantage;
};

// Record-setting edges of one vantage point's tree, ascending edge ids.
std::vector<int> revealed_from_tree(const ShortestPathTree& tree,
                                    const CapacityAssignment& c);
EdgeMask reveal_mask_from_tree(const ShortestPathTree& tree, const CapacityAssignment& c,
                               int edge_count);

RevealReport revealed_edges(const WeightedGraph& g, const std::vector<int>& s_set,
                            const CapacityAssignment& c);

// Trees supplied by the caller (one per vantage point, same order); used
// by instance families that carry their own tie-break policy.
RevealReport revealed_edges_with_trees(const WeightedGraph& g,
                                       const std::vector<int>& s_set,
                                       const std::vector<const ShortestPathTree*>& trees,
                                       const CapacityAssignment& c);

// Independent oracle: for every (s, t) pair takes the strict-minimum edge
// of the tree path from s to t. Exists to validate revealed_edges; keeps
// no logic in common with the record-walk above.
std::vector<int> revealed_edges_brute_force(const WeightedGraph& g,
                                            const std::vector<int>& s_set,
                                            const CapacityAssignment& c);

// Per-vertex reveal masks under fixed capacities; reveal counts of any
// vantage set are unions of these.
std::vector<EdgeMask> vantage_reveal_masks(const WeightedGraph& g,
                                           const CapacityAssignment& c);

struct BruteForceOptResult {
  std::vector<int> best_set;  // lexicographically smallest maximizer
  int opt_count = 0;
};

// Exact optimum over all k-subsets of vantage points. Refuses (throws,
// reporting the subset count) when C(n, k) exceeds subset_budget.
BruteForceOptResult brute_force_opt(const WeightedGraph& g, const CapacityAssignment& c,
                                    int k, std::uint64_t subset_budget = 5'000'000);

}  // namespace vantage
