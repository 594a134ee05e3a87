#pragma once
// Generators for the benchmark families: disjoint path families, the
// randomized hard distribution with planted good paths, the torus with a
// planted high-capacity tree, the vertex-cover reduction, and generic
// random trees / grids. Every bundle with a planted witness is audited
// at generation time.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vantage/capacity.hpp"
#include "vantage/graph.hpp"
#include "vantage/spt.hpp"

namespace vantage {

struct InstanceBundle {
  WeightedGraph graph;
  std::optional<CapacityAssignment> capacities;
  nlohmann::json metadata;  // generator, params, seed, planted structures
};

// k disjoint unit-weight paths of floor(n/k) vertices each; n is rounded
// down to a multiple of k (recorded in metadata). No capacities: these
// are the adversary's playground.
InstanceBundle gen_path_family(int n, int k);

// About sqrt(kn) paths of about sqrt(n/k) vertices. k seeded-random
// "good" paths carry strictly decreasing capacities from their left
// endpoint; the rest carry seeded-random per-path rank blocks. Metadata
// carries the good paths and the planted witness (the good left
// endpoints) with its audited reveal count.
InstanceBundle gen_randomized_lb_instance(int n, int k, std::uint64_t seed);

// side x side unit-weight torus. The top n-1 ranks lie on the canonical
// tree of chosen_vertex, decreasing by tree layer (ascending child id
// within a layer); remaining ranks are seeded-random on the other edges.
// The instance carries its own tie-break policy: probes follow
// torus_canonical_spt, not the default lexicographic trees.
InstanceBundle gen_torus_instance(int side, int chosen_vertex, std::uint64_t seed);

// Same vertices and edges; edge i gets weight 1 + 2^-(i+1), which makes
// every shortest path unique (checked via certify_unique_paths).
InstanceBundle gen_vertex_cover_reduction(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges);

// Uniform random parent attachment, unit weights.
InstanceBundle gen_random_tree(int n, std::uint64_t seed);

// width x height unit-weight grid, vertex id = row * width + col.
InstanceBundle gen_grid(int width, int height);

// Canonical torus tree rooted at `root`: the root's row, plus per column
// a vertical chain hanging from that row, arms split floor(side/2)
// right/down and the remainder left/up.
ShortestPathTree torus_canonical_spt(const WeightedGraph& torus, int side, int root);

// Bundle directory: graph.txt, optional capacities.txt, meta.json.
void save_bundle(const InstanceBundle& bundle, const std::string& directory);
InstanceBundle load_bundle(const std::string& directory);

}  // namespace vantage
