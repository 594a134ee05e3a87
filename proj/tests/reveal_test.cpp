#include <doctest.h>

#include "test_support.hpp"
#include "vantage/reveal.hpp"

using namespace vantage;
using namespace testsupport;

TEST_CASE("record-setting reveals on a path") {
  WeightedGraph g = path_graph(4);
  // ranks (e0,e1,e2) = (3,1,2): from v0 the records are e0 and e1.
  CapacityAssignment c = make_capacity({3, 1, 2});
  RevealReport r = revealed_edges(g, {0}, c);
  CHECK(r.revealed == std::vector<int>{0, 1});

  // Increasing ranks away from v0: everything from v0, only the incident
  // edge from the far end.
  CapacityAssignment inc = make_capacity({1, 2, 3});
  CHECK(revealed_edges(g, {0}, inc).revealed == std::vector<int>{0, 1, 2});
  CHECK(revealed_edges(g, {3}, inc).revealed == std::vector<int>{2});
}

TEST_CASE("star center reveals every edge") {
  WeightedGraph g = star_graph(5);
  Prng rng(3);
  CapacityAssignment c = random_capacity(g.edge_count(), rng);
  CHECK(static_cast<int>(revealed_edges(g, {0}, c).revealed.size()) == 5);
  CHECK(revealed_edges_brute_force(g, {0}, c).size() == 5);
}

TEST_CASE("single edge graph") {
  WeightedGraph g = path_graph(2);
  CapacityAssignment c = make_capacity({1});
  CHECK(revealed_edges_brute_force(g, {0}, c) == std::vector<int>{0});
}

TEST_CASE("every vertex as vantage point reveals all edges of unit-weight graphs") {
  Prng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = gen_grid(2 + rng.index(3), 2 + rng.index(3)).graph;
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    CapacityAssignment c = random_capacity(g.edge_count(), rng);
    CHECK(static_cast<int>(revealed_edges(g, all, c).revealed.size()) == g.edge_count());
  }
}

TEST_CASE("report unions per-vantage reveals") {
  WeightedGraph g = path_graph(4);
  CapacityAssignment c = make_capacity({3, 1, 2});
  RevealReport r = revealed_edges(g, {0, 3}, c);
  EdgeMask mask(g.edge_count());
  for (const auto& [s, edges] : r.per_vantage) {
    for (int e : edges) mask.set(e);
  }
  CHECK(mask.to_sorted_ids() == r.revealed);
}

TEST_CASE("fast reveal equals the per-pair brute force oracle") {
  Prng rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    WeightedGraph g;
    if (rng.below(2) == 0) {
      g = random_tree_graph(2 + rng.index(7), rng.next());
    } else {
      g = random_unique_sp_graph(3 + rng.index(5), 8, rng);
    }
    CapacityAssignment c = random_capacity(g.edge_count(), rng);
    int set_size = 1 + rng.index(std::min(3, g.vertex_count()));
    std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> s = rng.sample_without_replacement(ids, set_size);
    CHECK(revealed_edges(g, s, c).revealed == revealed_edges_brute_force(g, s, c));
  }
}

TEST_CASE("reveal sets are monotone in the vantage set") {
  Prng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    WeightedGraph g = random_unique_sp_graph(3 + rng.index(5), 8, rng);
    CapacityAssignment c = random_capacity(g.edge_count(), rng);
    int s = rng.index(g.vertex_count());
    int w = rng.index(g.vertex_count());
    auto small = revealed_edges(g, {s}, c).revealed;
    auto large = revealed_edges(g, {s, w}, c).revealed;
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("a vantage point on the path dominates the downstream segment") {
  // On unique-shortest-path graphs: if u lies on the s->w path, u alone
  // reveals every edge s reveals on the u..w segment.
  Prng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    WeightedGraph g = random_unique_sp_graph(3 + rng.index(5), 8, rng);
    CapacityAssignment c = random_capacity(g.edge_count(), rng);
    int s = rng.index(g.vertex_count());
    ShortestPathTree tree = shortest_path_tree(g, s);
    int w = rng.index(g.vertex_count());
    if (w == s || !tree.reached[static_cast<std::size_t>(w)]) continue;
    std::vector<int> vertices = tree.path_vertices_from_root(w);
    int u = vertices[static_cast<std::size_t>(rng.below(vertices.size()))];
    if (u == s) continue;

    auto revealed_by_s = revealed_edges(g, {s}, c).revealed;
    auto revealed_by_u = revealed_edges(g, {u}, c).revealed;
    // Segment u..w of the s-rooted path.
    std::vector<int> path_edges = tree.path_edges_from_root(w);
    std::vector<int> segment;
    bool past_u = false;
    for (std::size_t i = 0; i < path_edges.size(); ++i) {
      if (vertices[i] == u) past_u = true;
      if (past_u) segment.push_back(path_edges[i]);
    }
    for (int e : segment) {
      if (std::binary_search(revealed_by_s.begin(), revealed_by_s.end(), e)) {
        CHECK(std::binary_search(revealed_by_u.begin(), revealed_by_u.end(), e));
      }
    }
  }
}

TEST_CASE("brute force optimum on small instances") {
  // Two disjoint 3-edge paths with ranks decreasing away from the left
  // ends: the two left endpoints reveal everything.
  std::vector<EdgeSpec> edges;
  for (int p = 0; p < 2; ++p) {
    for (int j = 0; j < 3; ++j) {
      edges.push_back({p * 4 + j, p * 4 + j + 1, Rational(1)});
    }
  }
  WeightedGraph g = build_graph(8, edges);
  CapacityAssignment c = make_capacity({3, 2, 1, 6, 5, 4});
  BruteForceOptResult r = brute_force_opt(g, c, 2);
  CHECK(r.opt_count == 6);
  CHECK(r.best_set == std::vector<int>{0, 4});

  WeightedGraph path = path_graph(4);
  CapacityAssignment inc = make_capacity({1, 2, 3});
  BruteForceOptResult single = brute_force_opt(path, inc, 1);
  CHECK(single.opt_count == 3);
  CHECK(single.best_set == std::vector<int>{0});

  BruteForceOptResult all = brute_force_opt(path, inc, 4);
  CHECK(all.opt_count == 3);

  CHECK_THROWS_WITH_AS(brute_force_opt(path, inc, 2, 3), doctest::Contains("budget"),
                       std::runtime_error);
}
