#include <doctest.h>

#include "test_support.hpp"
#include "vantage/counting.hpp"
#include "vantage/eval.hpp"

using namespace vantage;
using namespace testsupport;

namespace {

EdgeTree chain_tree(int nodes) {
  std::vector<int> parents{-1}, payload{0};
  for (int v = 1; v < nodes; ++v) {
    parents.push_back(v - 1);
    payload.push_back(v);
  }
  return EdgeTree::from_parents(std::move(parents), std::move(payload));
}

}  // namespace

TEST_CASE("coloring polynomial on tiny trees") {
  CHECK(count_black_white_colorings(chain_tree(1)).coeff == std::vector<BigInt>{0, 1});
  CHECK(count_black_white_colorings(chain_tree(2)).coeff ==
        std::vector<BigInt>{0, 2, 1});
  EdgeTree cherry = EdgeTree::from_parents({-1, 0, 0}, {0, 1, 2});
  CHECK(count_black_white_colorings(cherry).coeff == std::vector<BigInt>{0, 1, 3, 1});
}

TEST_CASE("good labelling counts on tiny trees") {
  CHECK(count_good_labellings(chain_tree(1)) == 1);
  CHECK(count_good_labellings(chain_tree(3)) == 2);
  EdgeTree cherry = EdgeTree::from_parents({-1, 0, 0}, {0, 1, 2});
  CHECK(count_good_labellings(cherry) == 4);
}

TEST_CASE("coloring and labelling counts match enumeration on random trees") {
  Prng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    EdgeTree t = random_edge_tree(1 + rng.index(12), rng);
    CountPolynomial poly = count_black_white_colorings(t);
    std::vector<BigInt> brute = brute_colorings(t);
    REQUIRE(poly.coeff.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(poly.coeff[i] == brute[i]);
    CHECK(poly.coeff.front() == 0);
    CHECK(poly.coeff.back() == 1);
    BigInt total = 0;
    for (const BigInt& b : poly.coeff) total += b;
    CHECK(total <= BigInt(1) << t.size());
    if (t.size() <= 8) CHECK(count_good_labellings(t) == brute_good_labellings(t));
  }
}

TEST_CASE("coloring computation uses linearly many polynomial multiplications") {
  Prng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeTree t = random_edge_tree(2 + rng.index(60), rng);
    CountingStats stats;
    count_black_white_colorings(t, &stats);
    CHECK(stats.polynomial_multiplications <= static_cast<std::size_t>(t.size()));
  }
}

TEST_CASE("essential vantage points on a path") {
  WeightedGraph g = path_graph(4);
  // e = (v2,v3): v0's probe runs through v1, so only v1 is essential.
  CHECK(essential_vantage_points(g, {0, 1}, 2) == std::vector<int>{1});
  // On a path every probe from the far side crosses the edge.
  CHECK(essential_vantage_points(g, {3}, 0) == std::vector<int>{3});
  // Probes from v1 never traverse the heavy chord of a triangle.
  WeightedGraph tri = build_graph(
      3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(5)}});
  CHECK(essential_vantage_points(tri, {1}, 2).empty());
}

TEST_CASE("edge tree construction on a path") {
  WeightedGraph g = path_graph(3);
  EdgeTreeResult r = build_edge_tree(g, {0}, 1);
  REQUIRE(r.kind == EdgeTreeKind::kTree);
  CHECK(r.tree.size() == 2);
  CHECK(r.tree.edge_id == std::vector<int>{1, 0});
  CHECK(r.tree.parent == std::vector<int>{-1, 0});

  CHECK(build_edge_tree(g, {1}, 0).kind == EdgeTreeKind::kIncidentVantage);
  WeightedGraph two = build_graph(4, {{0, 1, Rational(1)}, {2, 3, Rational(1)}});
  CHECK(build_edge_tree(two, {0}, 1).kind == EdgeTreeKind::kNoEssential);
}

TEST_CASE("reveal probabilities on paths") {
  WeightedGraph g3 = path_graph(3);
  CHECK(reveal_probability(g3, {0}, 1) == make_rational(BigInt(1), BigInt(2)));
  CHECK(reveal_probability(g3, {0}, 0) == Rational(1));

  WeightedGraph g4 = path_graph(4);
  CHECK(reveal_probability(g4, {0}, 2) == make_rational(BigInt(1), BigInt(3)));
}

TEST_CASE("an edge off every shortest path is never revealed") {
  // Triangle with one heavy edge: (0,2) lies on no shortest path, so even
  // its own endpoints cannot reveal it.
  WeightedGraph g = build_graph(
      3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(5)}});
  REQUIRE(certify_unique_paths(g).empty());
  CHECK(reveal_probability(g, {0}, 2) == Rational(0));
  CHECK(reveal_probability(g, {0, 2}, 2) == Rational(0));
  CHECK(brute_edge_probability(g, {0, 2}, 2) == Rational(0));
}

TEST_CASE("expected reveals on the three-edge path") {
  WeightedGraph g = path_graph(4);
  CHECK(expected_reveals(g, {0}) == make_rational(BigInt(11), BigInt(6)));
  CHECK(expected_reveals(g, {0, 1, 2, 3}) == Rational(3));
}

TEST_CASE("per-edge probabilities match full enumeration") {
  Prng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    WeightedGraph g = rng.below(2) == 0 ? random_tree_graph(2 + rng.index(5), rng.next())
                                        : random_unique_sp_graph(3 + rng.index(3), 6, rng);
    std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> s =
        rng.sample_without_replacement(ids, 1 + rng.index(std::min(3, g.vertex_count())));
    SptCache cache(g);
    FactorialTable factorials;
    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(reveal_probability(g, s, e, cache, factorials) ==
            brute_edge_probability(g, s, e));
    }
  }
}

TEST_CASE("essential filtering preserves the reveal probability") {
  Prng rng(88);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = random_unique_sp_graph(4 + rng.index(3), 7, rng);
    std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> s = rng.sample_without_replacement(ids, 2 + rng.index(2));
    SptCache cache(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      bool endpoint_in_s = false;
      for (int v : s) endpoint_in_s = endpoint_in_s || edge.touches(v);
      if (endpoint_in_s) continue;
      std::vector<int> essential = essential_vantage_points(g, s, e, cache);
      if (essential.empty() || essential == s) continue;
      CHECK(brute_edge_probability(g, s, e) == brute_edge_probability(g, essential, e));
    }
  }
}

TEST_CASE("monotonicity and submodularity of expected reveals") {
  Prng rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = rng.below(2) == 0 ? random_tree_graph(3 + rng.index(4), rng.next())
                                        : random_unique_sp_graph(4 + rng.index(3), 7, rng);
    const int n = g.vertex_count();
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> y = rng.sample_without_replacement(ids, 2 + rng.index(n - 2));
    std::vector<int> x = rng.sample_without_replacement(y, 1 + rng.index(static_cast<int>(y.size())));
    int w = rng.index(n);
    bool in_y = std::find(y.begin(), y.end(), w) != y.end();
    if (in_y) continue;
    std::vector<int> xw = x, yw = y;
    xw.push_back(w);
    yw.push_back(w);
    SptCache cache(g);
    Rational fx = expected_reveals(g, x, cache);
    Rational fxw = expected_reveals(g, xw, cache);
    Rational fy = expected_reveals(g, y, cache);
    Rational fyw = expected_reveals(g, yw, cache);
    CHECK(fxw >= fx);
    CHECK(fxw - fx >= fyw - fy);
  }
}
