#include "vantage/adversary.hpp"

#include <algorithm>
#include <stdexcept>

#include "vantage/instances.hpp"
#include "vantage/prng.hpp"
#include "vantage/reveal.hpp"

namespace vantage {

namespace {

struct PathState {
  int in_game_revealed = 0;  // also the next in-block rank offset
};

}  // namespace

GameTranscript play_adversary_game(int n, int k, int budget, AdaptiveStrategy& strategy) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  InstanceBundle family = gen_path_family(n, k);
  const WeightedGraph& g = family.graph;
  const int path_len = family.metadata.at("path_len").get<int>();
  const int n_used = k * path_len;
  const int edges_per_path = path_len - 1;
  const int m = g.edge_count();
  if (budget < 0 || budget > n_used) throw std::invalid_argument("budget out of range");

  GameTranscript t;
  t.n = n_used;
  t.k = k;
  t.path_len = path_len;
  t.budget = budget;
  t.strategy = strategy.name();
  t.lambda.assign(static_cast<std::size_t>(k), 0);

  std::vector<bool> selected(static_cast<std::size_t>(n_used), false);
  std::vector<bool> revealed(static_cast<std::size_t>(m), false);
  std::vector<int> ranks(static_cast<std::size_t>(m), 0);
  std::vector<PathState> paths(static_cast<std::size_t>(k));

  GameView view;
  view.n = n_used;
  view.k = k;
  view.path_len = path_len;
  view.budget = budget;
  view.graph = &g;
  view.moves = &t.moves;
  view.selected = &selected;
  view.edge_revealed = &revealed;
  view.lambda = &t.lambda;

  auto edge_of = [&](int path, int j) { return path * edges_per_path + j; };

  for (int round = 0; round < budget; ++round) {
    int v = strategy.next(view);
    if (v < 0 || v >= n_used || selected[static_cast<std::size_t>(v)]) {
      t.fault = true;
      t.fault_reason = "strategy returned an invalid or already selected vertex: " +
                       std::to_string(v);
      t.alpha = make_rational(BigInt(static_cast<long>(t.moves.size())), BigInt(k));
      return t;
    }
    selected[static_cast<std::size_t>(v)] = true;
    const int path = v / path_len;
    const int pos = v % path_len;
    ++t.lambda[static_cast<std::size_t>(path)];

    AdversaryMove move;
    move.round = round;
    move.vertex = v;
    // Unrevealed incident edges get the next lowest ranks in the path's
    // block (left edge first); everything still hidden will end up above
    // them, so probes reveal nothing beyond the incident edges.
    for (int j : {pos - 1, pos}) {
      if (j < 0 || j >= edges_per_path) continue;
      int e = edge_of(path, j);
      if (revealed[static_cast<std::size_t>(e)]) continue;
      revealed[static_cast<std::size_t>(e)] = true;
      int rank = path * edges_per_path + (++paths[static_cast<std::size_t>(path)].in_game_revealed);
      ranks[static_cast<std::size_t>(e)] = rank;
      move.reveals.emplace_back(e, rank);
      ++t.alg_revealed;
    }
    t.moves.push_back(std::move(move));
  }

  // Finalization: complete the assignment path by path.
  t.witnesses.assign(static_cast<std::size_t>(k), -1);
  t.claims.assign(static_cast<std::size_t>(k), 0);
  for (int p = 0; p < k; ++p) {
    const int base = p * edges_per_path;
    const int lambda = t.lambda[static_cast<std::size_t>(p)];
    int counter = paths[static_cast<std::size_t>(p)].in_game_revealed;

    if (lambda == 0) {
      // Untouched path: decreasing capacities from the left endpoint, so
      // that endpoint alone would have revealed the whole path.
      for (int j = 0; j < edges_per_path; ++j) {
        ranks[static_cast<std::size_t>(edge_of(p, j))] = base + edges_per_path - j;
      }
      if (edges_per_path > 0) {
        t.witnesses[static_cast<std::size_t>(p)] = p * path_len;
        t.claims[static_cast<std::size_t>(p)] = edges_per_path;
      }
      continue;
    }

    const int stretch_len = std::max(0, edges_per_path / (lambda + 1) - 2);
    int stretch_start = -1;
    if (stretch_len >= 1) {
      // Longest maximal run of edges with no selected endpoint (leftmost
      // on ties), then a placement inside it that keeps an edge on each
      // side when possible.
      auto is_free = [&](int j) {
        return !selected[static_cast<std::size_t>(p * path_len + j)] &&
               !selected[static_cast<std::size_t>(p * path_len + j + 1)];
      };
      int best_a = -1, best_len = 0;
      int j = 0;
      while (j < edges_per_path) {
        if (!is_free(j)) {
          ++j;
          continue;
        }
        int a = j;
        while (j < edges_per_path && is_free(j)) ++j;
        if (j - a > best_len) {
          best_len = j - a;
          best_a = a;
        }
      }
      if (best_len < stretch_len) {
        throw std::logic_error("adversary: no free stretch of the guaranteed length");
      }
      const int b = best_a + best_len - 1;
      const int interior_lo = std::max(best_a, 1);
      const int interior_hi = std::min(b - stretch_len + 1, edges_per_path - 1 - stretch_len);
      stretch_start = interior_lo <= interior_hi ? interior_lo : best_a;

      long long claim = stretch_len;
      if (stretch_start >= 1) ++claim;                                // left outer edge
      if (stretch_start + stretch_len <= edges_per_path - 1) ++claim; // right outer edge
      t.witnesses[static_cast<std::size_t>(p)] = p * path_len + stretch_start;
      t.claims[static_cast<std::size_t>(p)] = claim;
    }

    // Non-stretch unrevealed edges take the next ranks left to right; the
    // stretch takes the top of the block, decreasing from its left end.
    for (int j = 0; j < edges_per_path; ++j) {
      int e = edge_of(p, j);
      if (revealed[static_cast<std::size_t>(e)]) continue;
      if (stretch_start != -1 && j >= stretch_start && j < stretch_start + stretch_len) continue;
      ranks[static_cast<std::size_t>(e)] = base + (++counter);
    }
    for (int i = 0; i < stretch_len; ++i) {
      ranks[static_cast<std::size_t>(edge_of(p, stretch_start + i))] =
          base + edges_per_path - i;
    }
    if (counter != edges_per_path - stretch_len) {
      throw std::logic_error("adversary: rank accounting is inconsistent");
    }
    // Everything assigned after the game sits above the in-game reveals.
    for (int j = 0; j < edges_per_path; ++j) {
      int e = edge_of(p, j);
      if (!revealed[static_cast<std::size_t>(e)] &&
          ranks[static_cast<std::size_t>(e)] <=
              base + paths[static_cast<std::size_t>(p)].in_game_revealed) {
        throw std::logic_error("adversary: a hidden edge received a revealed-level rank");
      }
    }
  }
  t.final_capacities = make_capacity(ranks);  // validates the bijection
  for (long long c : t.claims) t.opt_lower_bound += c;

  // Replay audit: the incremental reveals shown during the game must be
  // reproduced exactly by probing under the final capacities.
  {
    EdgeMask previous(m);
    std::vector<int> prefix;
    for (const AdversaryMove& move : t.moves) {
      prefix.push_back(move.vertex);
      RevealReport now = revealed_edges(g, prefix, t.final_capacities);
      EdgeMask mask(m);
      for (int e : now.revealed) mask.set(e);
      std::vector<int> fresh;
      for (int e : now.revealed) {
        if (!previous.test(e)) fresh.push_back(e);
      }
      std::vector<int> shown;
      for (auto [e, rank] : move.reveals) {
        shown.push_back(e);
        if (t.final_capacities.rank[static_cast<std::size_t>(e)] != rank) {
          throw std::logic_error("adversary: a revealed rank changed at finalization");
        }
      }
      std::sort(shown.begin(), shown.end());
      if (fresh != shown) throw std::logic_error("adversary: replay audit failed");
      previous = mask;
    }
    t.replay_ok = true;
  }
  // Witness audit: each claimed contribution must be achievable.
  for (int p = 0; p < k; ++p) {
    if (t.claims[static_cast<std::size_t>(p)] == 0) continue;
    RevealReport probe =
        revealed_edges(g, {t.witnesses[static_cast<std::size_t>(p)]}, t.final_capacities);
    if (static_cast<long long>(probe.revealed.size()) < t.claims[static_cast<std::size_t>(p)]) {
      throw std::logic_error("adversary: witness audit failed on path " + std::to_string(p));
    }
  }
  t.witness_ok = true;

  auto [alpha, beta] = measure_tradeoff(t);
  t.alpha = alpha;
  t.beta = beta;
  return t;
}

std::pair<Rational, std::optional<Rational>> measure_tradeoff(const GameTranscript& t) {
  Rational alpha = make_rational(BigInt(static_cast<long>(t.moves.size())), BigInt(t.k));
  if (t.alg_revealed == 0) return {alpha, std::nullopt};
  return {alpha, make_rational(BigInt(static_cast<long>(t.opt_lower_bound)),
                               BigInt(static_cast<long>(t.alg_revealed)))};
}

namespace {

class FirstVertexStrategy final : public AdaptiveStrategy {
 public:
  std::string name() const override { return "first-vertex"; }
  int next(const GameView& view) override {
    for (int v = 0; v < view.n; ++v) {
      if (!(*view.selected)[static_cast<std::size_t>(v)]) return v;
    }
    return -1;
  }
};

class EvenlySpacedStrategy final : public AdaptiveStrategy {
 public:
  std::string name() const override { return "evenly-spaced"; }
  int next(const GameView& view) override {
    const int t = static_cast<int>(view.moves->size());
    const int path = t % view.k;
    const int index_on_path = t / view.k;
    int quota = view.budget / view.k + (path < view.budget % view.k ? 1 : 0);
    quota = std::max(quota, 1);
    int pos = (index_on_path + 1) * view.path_len / (quota + 1);
    pos = std::min(pos, view.path_len - 1);
    // Nearest free vertex at or after the target spot, then anywhere.
    for (int candidate = path * view.path_len + pos;
         candidate < (path + 1) * view.path_len; ++candidate) {
      if (!(*view.selected)[static_cast<std::size_t>(candidate)]) return candidate;
    }
    for (int v = 0; v < view.n; ++v) {
      if (!(*view.selected)[static_cast<std::size_t>(v)]) return v;
    }
    return -1;
  }
};

class SeededRandomStrategy final : public AdaptiveStrategy {
 public:
  explicit SeededRandomStrategy(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override {
    return "seeded-random(seed=" + std::to_string(seed_) + ")";
  }
  int next(const GameView& view) override {
    std::vector<int> free;
    for (int v = 0; v < view.n; ++v) {
      if (!(*view.selected)[static_cast<std::size_t>(v)]) free.push_back(v);
    }
    if (free.empty()) return -1;
    return free[static_cast<std::size_t>(rng_.index(static_cast<int>(free.size())))];
  }

 private:
  std::uint64_t seed_;
  Prng rng_;
};

// Chases immediate guaranteed reveals: most unrevealed incident edges
// first, then the spot farthest from previous selections on its path.
class GreedyOnRevealedStrategy final : public AdaptiveStrategy {
 public:
  std::string name() const override { return "greedy-on-revealed"; }
  int next(const GameView& view) override {
    int best = -1, best_score = -1, best_distance = -1;
    for (int v = 0; v < view.n; ++v) {
      if ((*view.selected)[static_cast<std::size_t>(v)]) continue;
      int score = 0;
      for (int e : view.graph->incident(v)) {
        if (!(*view.edge_revealed)[static_cast<std::size_t>(e)]) ++score;
      }
      int distance = view.path_len;  // effectively infinity
      const int path = v / view.path_len;
      for (int u = path * view.path_len; u < (path + 1) * view.path_len; ++u) {
        if ((*view.selected)[static_cast<std::size_t>(u)]) {
          distance = std::min(distance, std::abs(u - v));
        }
      }
      if (score > best_score || (score == best_score && distance > best_distance)) {
        best = v;
        best_score = score;
        best_distance = distance;
      }
    }
    return best;
  }
};

}  // namespace

std::vector<std::string> strategy_zoo() {
  return {"first-vertex", "evenly-spaced", "seeded-random", "greedy-on-revealed"};
}

std::unique_ptr<AdaptiveStrategy> make_strategy(const std::string& name,
                                                std::uint64_t seed) {
  if (name == "first-vertex") return std::make_unique<FirstVertexStrategy>();
  if (name == "evenly-spaced") return std::make_unique<EvenlySpacedStrategy>();
  if (name == "seeded-random") return std::make_unique<SeededRandomStrategy>(seed);
  if (name == "greedy-on-revealed") return std::make_unique<GreedyOnRevealedStrategy>();
  throw std::invalid_argument("unknown strategy: " + name);
}

}  // namespace vantage
