#pragma once
// Worst-case vantage point selection: tree covers and the derived
// deterministic / randomized tree algorithms, plus the planar algorithm
// that takes every boundary vertex of an r-division.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vantage/graph.hpp"

namespace vantage {

struct TreeCover {
  int gamma = 0;
  int root_used = 0;
  std::vector<int> members;  // in selection order
};

bool is_tree(const WeightedGraph& g);

// Repeatedly extracts the deepest vertex whose inclusive descendant count
// in the remaining tree is at least gamma (ties to the lowest id) and
// removes its subtree, until at most gamma vertices remain. |members| is
// at most n / gamma, and for any re-rooting all but gamma vertices are
// descendants of members.
TreeCover tree_cover(const WeightedGraph& tree, int root, int gamma);

struct TreePointsResult {
  std::vector<int> points;  // ascending, exactly alpha * k
  int gamma = 0;
  std::string warning;      // nonempty when alpha is outside [1, sqrt(n/k)]
};

// Cover with gamma = ceil(n / (alpha k)), padded to alpha*k points with
// the lowest-id unselected vertices.
TreePointsResult adaptive_tree_deterministic(const WeightedGraph& tree, int k, int alpha);

// Uniform sample of alpha*k points (without replacement) from the cover
// with gamma = ceil(sqrt(n/k)); takes the whole cover plus padding when
// it is smaller than alpha*k.
TreePointsResult adaptive_tree_randomized(const WeightedGraph& tree, int k, int alpha,
                                          std::uint64_t seed);

struct RDivision {
  std::vector<std::vector<int>> pieces;    // disjoint cover of the vertices
  std::vector<std::vector<int>> boundary;  // per piece: vertices with a neighbor outside
  int r = 0;                               // target piece size

  int max_piece_size() const;
  int max_boundary_size() const;
};

// Axis-aligned blocks of side ceil(sqrt(r)) over a declared W x H grid
// (vertex id = row * W + col). Throws when g is not that grid,
// suggesting load_r_division for general planar inputs.
RDivision grid_r_division(const WeightedGraph& g, int width, int height, int r);

// File format: one "vertex_id piece_id" line per vertex. Validates that
// the pieces partition the vertex set; boundaries are recomputed from g.
RDivision load_r_division(const WeightedGraph& g, std::istream& in);
RDivision load_r_division_file(const WeightedGraph& g, const std::string& path);

// All boundary vertices of all pieces, ascending; falls back to the k
// lowest-id vertices when the division has no boundary at all.
std::vector<int> planar_adaptive(const WeightedGraph& g, const RDivision& division, int k);

}  // namespace vantage
