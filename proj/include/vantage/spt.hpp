#pragma once
// Deterministic single-source shortest path trees with exact rational
// distances. Ties are broken toward the path whose vertex-id sequence
// from the root is lexicographically smallest, which makes every tree
// (and every probe result built on it) reproducible on inputs where
// shortest paths are not unique. certify_unique_paths reports exactly
// the vertex pairs whose result depends on that rule.

#include <optional>
#include <utility>
#include <vector>

#include "vantage/graph.hpp"

namespace vantage {

struct ShortestPathTree {
  int root = -1;
  std::vector<int> parent;       // parent vertex, -1 for root / unreachable
  std::vector<int> parent_edge;  // edge id toward parent, -1 for root / unreachable
  std::vector<bool> reached;
  std::vector<Rational> distance;            // meaningful iff reached
  std::vector<std::vector<int>> children;    // child vertex ids, ascending

  bool contains_edge(int edge_id, const WeightedGraph& g) const {
    const Edge& e = g.edge(edge_id);
    return parent_edge[static_cast<std::size_t>(e.u)] == edge_id ||
           parent_edge[static_cast<std::size_t>(e.v)] == edge_id;
  }

  // Root-to-t paths; t must be reached.
  std::vector<int> path_edges_from_root(int t) const;
  std::vector<int> path_vertices_from_root(int t) const;
};

ShortestPathTree shortest_path_tree(const WeightedGraph& g, int source);

// Tie-broken shortest path s -> t as an edge sequence, oriented from s.
// Computed from the lower-id endpoint's tree so that the result of (s,t)
// is always the exact reverse of (t,s). Empty path for s == t;
// std::nullopt when s and t are in different components.
std::optional<std::vector<int>> path_between(const WeightedGraph& g, int s, int t);

// Unordered vertex pairs (s < t) joined by two or more distinct
// minimum-weight paths. Empty result certifies that every tree and path
// above is independent of the tie-break rule.
std::vector<std::pair<int, int>> certify_unique_paths(const WeightedGraph& g);

}  // namespace vantage
