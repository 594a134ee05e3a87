#include "vantage/greedy.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace vantage {

namespace {

struct LazyEntry {
  Rational gain;
  int vertex;
  int round;  // round the gain was computed in
};

struct LazyOrder {
  // Largest gain first; ties to the lowest vertex id.
  bool operator()(const LazyEntry& a, const LazyEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.vertex > b.vertex;
  }
};

std::vector<int> with_vertex(const std::vector<int>& set, int w) {
  std::vector<int> out = set;
  out.insert(std::lower_bound(out.begin(), out.end(), w), w);
  return out;
}

}  // namespace

GreedyTrace greedy_non_adaptive(const WeightedGraph& g, int k, bool lazy) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  SptCache cache(g);

  GreedyTrace trace;
  std::vector<int> chosen;
  std::vector<bool> picked(static_cast<std::size_t>(n), false);
  Rational value(0);

  if (!lazy) {
    for (int round = 0; round < k; ++round) {
      int best_vertex = -1;
      Rational best_value;
      for (int w = 0; w < n; ++w) {
        if (picked[static_cast<std::size_t>(w)]) continue;
        Rational candidate = expected_reveals(g, with_vertex(chosen, w), cache);
        if (best_vertex == -1 || candidate > best_value) {
          best_vertex = w;
          best_value = candidate;
        }
      }
      picked[static_cast<std::size_t>(best_vertex)] = true;
      chosen = with_vertex(chosen, best_vertex);
      trace.steps.push_back(GreedyStep{best_vertex, best_value - value, best_value});
      value = best_value;
    }
    trace.final_set = chosen;
    return trace;
  }

  std::priority_queue<LazyEntry, std::vector<LazyEntry>, LazyOrder> queue;
  for (int w = 0; w < n; ++w) {
    queue.push(LazyEntry{expected_reveals(g, {w}, cache), w, 0});
  }
  for (int round = 0; round < k; ++round) {
    while (true) {
      LazyEntry top = queue.top();
      queue.pop();
      if (top.round == round) {
        picked[static_cast<std::size_t>(top.vertex)] = true;
        chosen = with_vertex(chosen, top.vertex);
        trace.steps.push_back(GreedyStep{top.vertex, top.gain, value + top.gain});
        value += top.gain;
        break;
      }
      top.gain = expected_reveals(g, with_vertex(chosen, top.vertex), cache) - value;
      top.round = round;
      queue.push(top);
    }
  }
  trace.final_set = chosen;
  return trace;
}

}  // namespace vantage
