#pragma once
// Validation oracles and measurement: exhaustive expectation over all
// rank permutations, seeded Monte Carlo estimation, and alpha/beta
// measurement against an optimum (brute force or supplied).

#include <cstdint>
#include <optional>
#include <vector>

#include "vantage/capacity.hpp"
#include "vantage/graph.hpp"
#include "vantage/rational.hpp"
#include "vantage/reveal.hpp"

namespace vantage {

// Exact E[|revealed|] as the average over all m! permutations. Refuses
// (throws, quoting m!) above the cap: the point of the cap is to keep
// this the slow-but-obviously-correct oracle.
Rational exhaustive_permutation_expected_reveals(const WeightedGraph& g,
                                                 const std::vector<int>& s_set,
                                                 int edge_cap = 8);

struct MonteCarloResult {
  double mean = 0.0;
  std::optional<double> stderr_of_mean;  // empty for a single trial
  int trials = 0;
};

// Per-trial seeds derive from the master seed via a counter.
MonteCarloResult monte_carlo_expected_reveals(const WeightedGraph& g,
                                              const std::vector<int>& s_set, int trials,
                                              std::uint64_t seed);

enum class OptMode { kBruteForce, kSupplied };

struct AlphaBetaResult {
  Rational alpha;
  std::optional<Rational> beta;  // empty marks an infinite ratio
  long long opt_count = 0;
  long long revealed = 0;
};

// alpha = |alg_points| / k; beta = opt / |revealed(alg_points)|. With
// OptMode::kSupplied, supplied_opt carries the reference count (e.g. a
// planted witness's audited reveal count).
AlphaBetaResult measure_alpha_beta(const WeightedGraph& g, const CapacityAssignment& c,
                                   const std::vector<int>& alg_points, int k,
                                   OptMode mode, long long supplied_opt = 0);

}  // namespace vantage
