#pragma once
// Greedy maximization of the expected reveal count f(S). f is monotone
// submodular, so the k-round greedy sweep is a (1 - 1/e) approximation
// of the best k-set. All comparisons are exact rationals.

#include <vector>

#include "vantage/counting.hpp"
#include "vantage/graph.hpp"

namespace vantage {

struct GreedyStep {
  int vertex;
  Rational gain;   // exact marginal gain of this step
  Rational value;  // f after the step
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  std::vector<int> final_set;  // ascending

  Rational final_value() const { return steps.empty() ? Rational(0) : steps.back().value; }
};

// Ties go to the lowest vertex id. The lazy mode keeps stale marginal
// gains in a priority queue (valid upper bounds by submodularity) and
// recomputes only queue tops; it selects exactly the same set and trace
// as the exhaustive sweep.
GreedyTrace greedy_non_adaptive(const WeightedGraph& g, int k, bool lazy = false);

}  // namespace vantage
