#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "vantage/graph.hpp"
#include "vantage/spt.hpp"

using namespace vantage;
using namespace testsupport;

TEST_CASE("build_graph validates its input") {
  CHECK_NOTHROW(build_graph(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}));
  CHECK_THROWS_WITH_AS(build_graph(1, {{0, 0, Rational(1)}}), doctest::Contains("self-loop"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_graph(2, {{0, 1, Rational(1)}, {0, 1, Rational(2)}}),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_graph(2, {{0, 1, Rational(0)}}),
                       doctest::Contains("nonpositive"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_graph(2, {{0, 2, Rational(1)}}),
                       doctest::Contains("out of range"), std::invalid_argument);
}

TEST_CASE("graph file round trip and parse errors") {
  WeightedGraph g = build_graph(
      3, {{0, 1, make_rational(BigInt(3), BigInt(2))}, {1, 2, Rational(1)}});
  std::ostringstream out;
  write_graph(g, out);
  std::istringstream in(out.str());
  WeightedGraph back = read_graph(in);
  CHECK(back.vertex_count() == 3);
  CHECK(back.edge_count() == 2);
  CHECK(back.edge(0).weight == make_rational(BigInt(3), BigInt(2)));

  std::istringstream commented("# header\n2 1\n0 1 2/4\n");
  CHECK(read_graph(commented).edge(0).weight == make_rational(BigInt(1), BigInt(2)));

  std::istringstream bad("2 1\n0 1 zero\n");
  CHECK_THROWS_WITH_AS(read_graph(bad), doctest::Contains("line 2"), std::invalid_argument);
  std::istringstream truncated("3 2\n0 1 1\n");
  CHECK_THROWS_AS(read_graph(truncated), std::invalid_argument);
}

TEST_CASE("shortest path tree on a path") {
  WeightedGraph g = path_graph(3);
  ShortestPathTree t = shortest_path_tree(g, 0);
  CHECK(t.parent_edge[1] == 0);
  CHECK(t.parent_edge[2] == 1);
  CHECK(t.distance[2] == Rational(2));
}

TEST_CASE("four-cycle ties break toward the lexicographically smallest path") {
  WeightedGraph g = cycle_graph(4);  // edges (0,1),(1,2),(2,3),(3,0)
  ShortestPathTree t = shortest_path_tree(g, 0);
  // Opposite corner 2 is reachable as 0-1-2 or 0-3-2; the tie-break takes 0-1-2.
  CHECK(t.parent[2] == 1);
  CHECK(t.distance[2] == Rational(2));
  ShortestPathTree again = shortest_path_tree(g, 0);
  CHECK(t.parent == again.parent);
  CHECK(t.parent_edge == again.parent_edge);

  auto p02 = path_between(g, 0, 2);
  auto p20 = path_between(g, 2, 0);
  REQUIRE(p02.has_value());
  REQUIRE(p20.has_value());
  std::vector<int> reversed(p20->rbegin(), p20->rend());
  CHECK(*p02 == reversed);
}

TEST_CASE("disconnected graphs leave the other component unreached") {
  WeightedGraph g = build_graph(4, {{0, 1, Rational(1)}, {2, 3, Rational(1)}});
  ShortestPathTree t = shortest_path_tree(g, 0);
  CHECK(t.reached[1]);
  CHECK_FALSE(t.reached[2]);
  CHECK(t.parent_edge[2] == -1);
  CHECK_FALSE(path_between(g, 0, 3).has_value());
}

TEST_CASE("path_between identities") {
  WeightedGraph g = path_graph(3);
  CHECK(path_between(g, 1, 1)->empty());
  CHECK(*path_between(g, 0, 2) == std::vector<int>{0, 1});
}

TEST_CASE("certify_unique_paths finds exactly the tied pairs") {
  CHECK(certify_unique_paths(path_graph(4)).empty());
  auto tied = certify_unique_paths(cycle_graph(4));
  CHECK(tied == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
}

TEST_CASE("tree path weights equal tree distances on random graphs") {
  Prng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = random_unique_sp_graph(6, 9, rng);
    for (int s = 0; s < g.vertex_count(); ++s) {
      ShortestPathTree t = shortest_path_tree(g, s);
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (!t.reached[static_cast<std::size_t>(v)]) continue;
        auto path = path_between(g, s, v);
        REQUIRE(path.has_value());
        Rational total(0);
        for (int e : *path) total += g.edge(e).weight;
        CHECK(total == t.distance[static_cast<std::size_t>(v)]);
      }
    }
  }
}

TEST_CASE("path_between is reverse-symmetric on tie-heavy graphs") {
  WeightedGraph g = gen_grid(3, 3).graph;  // unit grid: plenty of ties
  for (int s = 0; s < 9; ++s) {
    for (int t = 0; t < 9; ++t) {
      auto fwd = path_between(g, s, t);
      auto bwd = path_between(g, t, s);
      REQUIRE(fwd.has_value());
      REQUIRE(bwd.has_value());
      std::vector<int> reversed(bwd->rbegin(), bwd->rend());
      CHECK(*fwd == reversed);
    }
  }
}
