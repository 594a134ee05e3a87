#include "vantage/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vantage/prng.hpp"
#include "vantage/spt.hpp"

namespace vantage {

namespace {

std::vector<int> normalize_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<ShortestPathTree> trees_for(const WeightedGraph& g, const std::vector<int>& s) {
  std::vector<ShortestPathTree> trees;
  trees.reserve(s.size());
  for (int v : s) trees.push_back(shortest_path_tree(g, v));
  return trees;
}

int reveal_count(const WeightedGraph& g, const std::vector<ShortestPathTree>& trees,
                 const CapacityAssignment& c) {
  EdgeMask all(g.edge_count());
  for (const auto& t : trees) all |= reveal_mask_from_tree(t, c, g.edge_count());
  return all.count();
}

}  // namespace

Rational exhaustive_permutation_expected_reveals(const WeightedGraph& g,
                                                 const std::vector<int>& s_set,
                                                 int edge_cap) {
  if (s_set.empty()) throw std::invalid_argument("empty vantage set");
  const int m = g.edge_count();
  if (m > edge_cap) {
    throw std::runtime_error("exhaustive oracle refused: m = " + std::to_string(m) +
                             " exceeds cap " + std::to_string(edge_cap) + "; would need " +
                             factorial(m).get_str() + " permutations");
  }
  std::vector<int> points = normalize_set(s_set);
  std::vector<ShortestPathTree> trees = trees_for(g, points);

  std::vector<int> ranks(static_cast<std::size_t>(m));
  std::iota(ranks.begin(), ranks.end(), 1);
  BigInt total = 0;
  BigInt permutations = 0;
  do {
    CapacityAssignment c{ranks};
    total += reveal_count(g, trees, c);
    ++permutations;
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  if (m == 0) return Rational(0);
  return make_rational(total, permutations);
}

MonteCarloResult monte_carlo_expected_reveals(const WeightedGraph& g,
                                              const std::vector<int>& s_set, int trials,
                                              std::uint64_t seed) {
  if (s_set.empty()) throw std::invalid_argument("empty vantage set");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  std::vector<int> points = normalize_set(s_set);
  std::vector<ShortestPathTree> trees = trees_for(g, points);

  const int m = g.edge_count();
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    Prng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    CapacityAssignment c = random_capacity(m, rng);
    double x = reveal_count(g, trees, c);
    sum += x;
    sum_sq += x * x;
  }
  MonteCarloResult result;
  result.trials = trials;
  result.mean = sum / trials;
  if (trials > 1) {
    double variance = (sum_sq - trials * result.mean * result.mean) / (trials - 1);
    result.stderr_of_mean = std::sqrt(std::max(variance, 0.0) / trials);
  }
  return result;
}

AlphaBetaResult measure_alpha_beta(const WeightedGraph& g, const CapacityAssignment& c,
                                   const std::vector<int>& alg_points, int k,
                                   OptMode mode, long long supplied_opt) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<int> points = normalize_set(alg_points);
  AlphaBetaResult result;
  result.alpha = make_rational(BigInt(static_cast<long>(points.size())), BigInt(k));
  result.revealed = static_cast<long long>(revealed_edges(g, points, c).revealed.size());
  result.opt_count = mode == OptMode::kBruteForce
                         ? brute_force_opt(g, c, k).opt_count
                         : supplied_opt;
  if (result.revealed > 0) {
    result.beta = make_rational(BigInt(static_cast<long>(result.opt_count)),
                                BigInt(static_cast<long>(result.revealed)));
  }
  return result;
}

}  // namespace vantage
