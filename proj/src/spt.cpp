#include "vantage/spt.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace vantage {

std::vector<int> ShortestPathTree::path_edges_from_root(int t) const {
  std::vector<int> edges;
  int v = t;
  while (parent[static_cast<std::size_t>(v)] != -1) {
    edges.push_back(parent_edge[static_cast<std::size_t>(v)]);
    v = parent[static_cast<std::size_t>(v)];
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

std::vector<int> ShortestPathTree::path_vertices_from_root(int t) const {
  std::vector<int> vertices{t};
  int v = t;
  while (parent[static_cast<std::size_t>(v)] != -1) {
    v = parent[static_cast<std::size_t>(v)];
    vertices.push_back(v);
  }
  std::reverse(vertices.begin(), vertices.end());
  return vertices;
}

namespace {

// Exact Dijkstra distances; no tie-breaking needed at this stage.
struct DistResult {
  std::vector<bool> reached;
  std::vector<Rational> dist;
  std::vector<int> order;  // reached vertices, ascending distance
};

DistResult dijkstra_distances(const WeightedGraph& g, int source) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  DistResult r;
  r.reached.assign(n, false);
  r.dist.assign(n, Rational(0));
  std::vector<bool> done(n, false);

  using Item = std::pair<Rational, int>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);

  r.reached[static_cast<std::size_t>(source)] = true;
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(v)]) continue;
    done[static_cast<std::size_t>(v)] = true;
    r.order.push_back(v);
    for (int e : g.incident(v)) {
      const Edge& edge = g.edge(e);
      int w = edge.other(v);
      Rational cand = d + edge.weight;
      std::size_t wi = static_cast<std::size_t>(w);
      if (!r.reached[wi] || cand < r.dist[wi]) {
        r.reached[wi] = true;
        r.dist[wi] = cand;
        queue.emplace(std::move(cand), w);
      }
    }
  }
  return r;
}

}  // namespace

ShortestPathTree shortest_path_tree(const WeightedGraph& g, int source) {
  if (!g.valid_vertex(source)) throw std::invalid_argument("invalid source vertex");
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  DistResult d = dijkstra_distances(g, source);

  ShortestPathTree t;
  t.root = source;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.reached = d.reached;
  t.distance = std::move(d.dist);
  t.children.assign(n, {});

  // Pick parents along the shortest-path DAG in distance order; the
  // lexicographically-smallest root path has optimal substructure, so the
  // running path vectors stay consistent.
  std::vector<std::vector<int>> path(n);
  path[static_cast<std::size_t>(source)] = {source};
  for (int v : d.order) {
    if (v == source) continue;
    std::size_t vi = static_cast<std::size_t>(v);
    std::vector<int> best;
    for (int e : g.incident(v)) {
      const Edge& edge = g.edge(e);
      int u = edge.other(v);
      std::size_t ui = static_cast<std::size_t>(u);
      if (!t.reached[ui]) continue;
      if (t.distance[ui] + edge.weight != t.distance[vi]) continue;
      std::vector<int> cand = path[ui];
      cand.push_back(v);
      if (best.empty() || cand < best) {
        best = std::move(cand);
        t.parent[vi] = u;
        t.parent_edge[vi] = e;
      }
    }
    path[vi] = std::move(best);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    int p = t.parent[static_cast<std::size_t>(v)];
    if (p != -1) t.children[static_cast<std::size_t>(p)].push_back(v);
  }
  return t;
}

std::optional<std::vector<int>> path_between(const WeightedGraph& g, int s, int t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t)) throw std::invalid_argument("invalid vertex");
  if (s == t) return std::vector<int>{};
  const int root = std::min(s, t);
  const int far = std::max(s, t);
  ShortestPathTree tree = shortest_path_tree(g, root);
  if (!tree.reached[static_cast<std::size_t>(far)]) return std::nullopt;
  std::vector<int> edges = tree.path_edges_from_root(far);
  if (s != root) std::reverse(edges.begin(), edges.end());
  return edges;
}

std::vector<std::pair<int, int>> certify_unique_paths(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> tied;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  for (int s = 0; s < g.vertex_count(); ++s) {
    DistResult d = dijkstra_distances(g, s);
    // ambiguous[v]: at least two distinct minimum-weight s->v paths.
    std::vector<bool> ambiguous(n, false);
    for (int v : d.order) {
      if (v == s) continue;
      std::size_t vi = static_cast<std::size_t>(v);
      int parents = 0;
      bool inherited = false;
      for (int e : g.incident(v)) {
        const Edge& edge = g.edge(e);
        int u = edge.other(v);
        std::size_t ui = static_cast<std::size_t>(u);
        if (!d.reached[ui] || d.dist[ui] + edge.weight != d.dist[vi]) continue;
        ++parents;
        inherited = inherited || ambiguous[ui];
      }
      ambiguous[vi] = parents > 1 || inherited;
      if (ambiguous[vi] && s < v) tied.emplace_back(s, v);
    }
  }
  std::sort(tied.begin(), tied.end());
  return tied;
}

}  // namespace vantage
