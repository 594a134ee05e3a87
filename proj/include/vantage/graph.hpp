#pragma once
// Weighted undirected graphs with positive exact-rational weights and
// stable edge indices. Immutable after construction; safe to share
// across threads.

#include <iosfwd>
#include <string>
#include <vector>

#include "vantage/rational.hpp"

namespace vantage {

struct Edge {
  int u = -1;
  int v = -1;
  Rational weight;

  int other(int x) const { return x == u ? v : u; }
  bool touches(int x) const { return x == u || x == v; }
};

struct EdgeSpec {
  int u;
  int v;
  Rational weight;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge ids of a vertex, ascending.
  const std::vector<int>& incident(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  // Edge id between two vertices, or -1.
  int edge_between(int u, int v) const;

  bool valid_vertex(int v) const { return v >= 0 && v < n_; }

  friend WeightedGraph build_graph(int vertex_count, const std::vector<EdgeSpec>& edge_list);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Validates and indexes an edge list (edge index = list position).
// Throws std::invalid_argument naming the offending edge on self-loops,
// duplicate edges, nonpositive weights, or out-of-range vertex ids.
WeightedGraph build_graph(int vertex_count, const std::vector<EdgeSpec>& edge_list);

// Text format: optional '#' comment lines, then "n m", then m lines
// "u v w" where w is a decimal integer or a fraction p/q. Edge index =
// line order. Errors report the offending line number.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);
void write_graph(const WeightedGraph& g, std::ostream& out);
void write_graph_file(const WeightedGraph& g, const std::string& path);

}  // namespace vantage
