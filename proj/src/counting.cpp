#include "vantage/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vantage {

EdgeTree EdgeTree::from_parents(std::vector<int> parents, std::vector<int> payload) {
  const int n = static_cast<int>(parents.size());
  if (n == 0) throw std::invalid_argument("empty edge tree");
  if (payload.size() != parents.size()) {
    throw std::invalid_argument("edge tree payload size mismatch");
  }
  if (parents[0] != -1) throw std::invalid_argument("node 0 must be the root");
  EdgeTree t;
  t.parent = std::move(parents);
  t.edge_id = std::move(payload);
  t.children.assign(static_cast<std::size_t>(n), {});
  for (int v = 1; v < n; ++v) {
    int p = t.parent[static_cast<std::size_t>(v)];
    if (p < 0 || p >= v) {
      throw std::invalid_argument("edge tree parents must precede their children");
    }
    t.children[static_cast<std::size_t>(p)].push_back(v);
  }
  return t;
}

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<int> post_order(const EdgeTree& t) {
  std::vector<int> order;
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    const auto& kids = t.children[static_cast<std::size_t>(node)];
    if (next_child < kids.size()) {
      int child = kids[next_child++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

}  // namespace

CountPolynomial count_black_white_colorings(const EdgeTree& t, CountingStats* stats) {
  const int n = t.size();
  std::vector<int> subtree_size(static_cast<std::size_t>(n), 1);
  std::vector<std::vector<BigInt>> poly(static_cast<std::size_t>(n));

  for (int node : post_order(t)) {
    std::size_t ni = static_cast<std::size_t>(node);
    if (t.is_leaf(node)) {
      poly[ni] = {BigInt(0), BigInt(1)};  // x: the leaf itself must be black
      continue;
    }
    // White node: every child subtree must block its own root-to-leaf paths.
    std::vector<BigInt> product{BigInt(1)};
    for (int child : t.children[ni]) {
      std::size_t ci = static_cast<std::size_t>(child);
      subtree_size[ni] += subtree_size[ci];
      if (product.size() == 1 && product[0] == 1) {
        product = std::move(poly[ci]);
      } else {
        product = poly_mul(product, poly[ci]);
        if (stats) ++stats->polynomial_multiplications;
      }
      poly[ci].clear();
    }
    // Black node: descendants arbitrary, x * (1+x)^(subtree-1).
    product.resize(static_cast<std::size_t>(subtree_size[ni]) + 1, BigInt(0));
    for (int b = 1; b <= subtree_size[ni]; ++b) {
      product[static_cast<std::size_t>(b)] += binomial(subtree_size[ni] - 1, b - 1);
    }
    poly[ni] = std::move(product);
  }
  return CountPolynomial{std::move(poly[0])};
}

BigInt count_good_labellings(const EdgeTree& t) {
  const int n = t.size();
  CountPolynomial colorings = count_black_white_colorings(t);
  FactorialTable fact;
  BigInt total = 0;
  // Colorings with some all-white root-to-leaf path, split by black count
  // t: each contributes (n-1-t)! t! labellings where the root's label is
  // a path minimum. The all-black term is identically zero and skipped.
  for (int black = 0; black <= n - 1; ++black) {
    const BigInt& blocked = colorings.coeff[static_cast<std::size_t>(black)];
    BigInt open = binomial(n, black) - blocked;
    if (open == 0) continue;
    total += open * fact(n - 1 - black) * fact(black);
  }
  return total;
}

const ShortestPathTree& SptCache::tree(int root) const {
  auto& slot = trees_.at(static_cast<std::size_t>(root));
  if (!slot) slot = std::make_unique<ShortestPathTree>(shortest_path_tree(*g_, root));
  return *slot;
}

namespace {

struct Crossing {
  int vantage;
  int far;  // endpoint of e reached through e on the vantage's tree
};

struct EdgeAnalysis {
  bool certain = false;           // endpoint vantage point probes along e
  std::vector<Crossing> crossing; // vantage points whose probes traverse e
  std::vector<int> essential;
};

std::vector<int> normalize_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

EdgeAnalysis analyze_edge(const WeightedGraph& g, const std::vector<int>& s_set,
                          int edge_id, const SptCache& cache) {
  const Edge& e = g.edge(edge_id);
  EdgeAnalysis a;
  std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> points = normalize_set(s_set);
  for (int s : points) in_s[static_cast<std::size_t>(s)] = true;

  for (int s : points) {
    const ShortestPathTree& tree = cache.tree(s);
    if (!tree.contains_edge(edge_id, g)) continue;
    int far = tree.parent_edge[static_cast<std::size_t>(e.u)] == edge_id ? e.u : e.v;
    if (s == e.u || s == e.v) a.certain = true;
    a.crossing.push_back(Crossing{s, far});
  }
  for (const Crossing& c : a.crossing) {
    const ShortestPathTree& tree = cache.tree(c.vantage);
    bool dominated = false;
    for (int x : tree.path_vertices_from_root(c.far)) {
      if (x != c.vantage && in_s[static_cast<std::size_t>(x)]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) a.essential.push_back(c.vantage);
  }
  return a;
}

}  // namespace

std::vector<int> essential_vantage_points(const WeightedGraph& g,
                                          const std::vector<int>& s_set, int edge_id,
                                          const SptCache& cache) {
  return analyze_edge(g, s_set, edge_id, cache).essential;
}

std::vector<int> essential_vantage_points(const WeightedGraph& g,
                                          const std::vector<int>& s_set, int edge_id) {
  SptCache cache(g);
  return essential_vantage_points(g, s_set, edge_id, cache);
}

EdgeTreeResult build_edge_tree(const WeightedGraph& g, const std::vector<int>& s_set,
                               int edge_id, const SptCache& cache) {
  EdgeAnalysis a = analyze_edge(g, s_set, edge_id, cache);
  if (a.certain) return EdgeTreeResult{EdgeTreeKind::kIncidentVantage, {}};
  if (a.essential.empty()) return EdgeTreeResult{EdgeTreeKind::kNoEssential, {}};

  // Union of the essential approach paths; each runs from the vantage
  // point through e to its far endpoint.
  std::set<int> union_edges;
  for (const Crossing& c : a.crossing) {
    if (!std::binary_search(a.essential.begin(), a.essential.end(), c.vantage)) continue;
    for (int f : cache.tree(c.vantage).path_edges_from_root(c.far)) union_edges.insert(f);
  }
  std::set<int> union_vertices;
  std::map<int, std::vector<int>> incident;
  for (int f : union_edges) {
    const Edge& edge = g.edge(f);
    union_vertices.insert(edge.u);
    union_vertices.insert(edge.v);
    incident[edge.u].push_back(f);
    incident[edge.v].push_back(f);
  }
  if (union_vertices.size() != union_edges.size() + 1) {
    throw std::runtime_error(
        "approach paths do not form a tree (shortest paths are not unique here)");
  }

  // Re-root on edges: e becomes node 0, every other union edge hangs off
  // the edge that precedes it on the way to e.
  const Edge& e = g.edge(edge_id);
  std::vector<int> parents{-1};
  std::vector<int> payload{edge_id};
  std::map<int, int> node_at_vertex{{e.u, 0}, {e.v, 0}};
  std::vector<int> frontier{e.u, e.v};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int f : incident[x]) {
      if (f == edge_id) continue;
      int y = g.edge(f).other(x);
      if (node_at_vertex.count(y)) continue;
      int node = static_cast<int>(parents.size());
      parents.push_back(node_at_vertex[x]);
      payload.push_back(f);
      node_at_vertex[y] = node;
      frontier.push_back(y);
    }
  }
  if (parents.size() != union_edges.size()) {
    throw std::runtime_error("edge tree construction failed to span the approach paths");
  }
  return EdgeTreeResult{EdgeTreeKind::kTree,
                        EdgeTree::from_parents(std::move(parents), std::move(payload))};
}

EdgeTreeResult build_edge_tree(const WeightedGraph& g, const std::vector<int>& s_set,
                               int edge_id) {
  SptCache cache(g);
  return build_edge_tree(g, s_set, edge_id, cache);
}

Rational reveal_probability(const WeightedGraph& g, const std::vector<int>& s_set,
                            int edge_id, const SptCache& cache,
                            FactorialTable& factorials) {
  EdgeTreeResult r = build_edge_tree(g, s_set, edge_id, cache);
  switch (r.kind) {
    case EdgeTreeKind::kIncidentVantage:
      return Rational(1);
    case EdgeTreeKind::kNoEssential:
      return Rational(0);
    case EdgeTreeKind::kTree:
      break;
  }
  BigInt good = count_good_labellings(r.tree);
  return make_rational(good, factorials(r.tree.size()));
}

Rational reveal_probability(const WeightedGraph& g, const std::vector<int>& s_set,
                            int edge_id) {
  SptCache cache(g);
  FactorialTable factorials;
  return reveal_probability(g, s_set, edge_id, cache, factorials);
}

Rational expected_reveals(const WeightedGraph& g, const std::vector<int>& s_set,
                          const SptCache& cache) {
  if (s_set.empty()) throw std::invalid_argument("empty vantage set");
  FactorialTable factorials;
  Rational total(0);
  for (int e = 0; e < g.edge_count(); ++e) {
    total += reveal_probability(g, s_set, e, cache, factorials);
  }
  return total;
}

Rational expected_reveals(const WeightedGraph& g, const std::vector<int>& s_set) {
  SptCache cache(g);
  return expected_reveals(g, s_set, cache);
}

}  // namespace vantage
