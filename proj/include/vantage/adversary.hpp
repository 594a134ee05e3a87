#pragma once
// Interactive lower-bound game on a family of k disjoint paths. The
// adversary answers each vantage point selection by revealing only the
// unrevealed edges incident to it, handing them the lowest ranks still
// free in the path's rank block; after the last round it completes the
// assignment so that a single well-placed vertex per path would have
// revealed a long decreasing stretch. Every transcript is audited: the
// in-game reveals must replay exactly under the final capacities, and
// every claimed optimum contribution is re-verified with a probe.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vantage/capacity.hpp"
#include "vantage/graph.hpp"
#include "vantage/rational.hpp"

namespace vantage {

struct AdversaryMove {
  int round = 0;
  int vertex = -1;
  std::vector<std::pair<int, int>> reveals;  // (edge id, rank)
};

struct GameView {
  int n = 0;          // vertices actually in play (k * path_len)
  int k = 0;
  int path_len = 0;   // vertices per path
  int budget = 0;
  const WeightedGraph* graph = nullptr;
  const std::vector<AdversaryMove>* moves = nullptr;
  const std::vector<bool>* selected = nullptr;       // per vertex
  const std::vector<bool>* edge_revealed = nullptr;  // per edge
  const std::vector<int>* lambda = nullptr;          // selections per path
};

// Deterministic callback; randomized strategies pre-commit a seed.
class AdaptiveStrategy {
 public:
  virtual ~AdaptiveStrategy() = default;
  virtual std::string name() const = 0;
  virtual int next(const GameView& view) = 0;
};

struct GameTranscript {
  int n = 0, k = 0, path_len = 0, budget = 0;
  std::string strategy;
  std::uint64_t strategy_seed = 0;
  std::vector<AdversaryMove> moves;
  std::vector<int> lambda;
  CapacityAssignment final_capacities;
  std::vector<int> witnesses;       // per path, -1 when nothing is claimed
  std::vector<long long> claims;    // per path contribution to the bound
  long long opt_lower_bound = 0;
  long long alg_revealed = 0;
  Rational alpha;
  std::optional<Rational> beta;     // nullopt marks an infinite ratio
  bool replay_ok = false;
  bool witness_ok = false;
  bool fault = false;               // strategy returned an invalid vertex
  std::string fault_reason;
};

// Runs `budget` rounds on k disjoint unit-weight paths of floor(n/k)
// vertices. Throws std::logic_error if the adversary's own consistency
// audits fail; a misbehaving strategy yields a fault transcript instead.
GameTranscript play_adversary_game(int n, int k, int budget, AdaptiveStrategy& strategy);

// alpha = selections / k; beta = certified optimum lower bound divided by
// the strategy's reveal count (nullopt when nothing was revealed).
std::pair<Rational, std::optional<Rational>> measure_tradeoff(const GameTranscript& t);

std::vector<std::string> strategy_zoo();
std::unique_ptr<AdaptiveStrategy> make_strategy(const std::string& name,
                                                std::uint64_t seed = 0);

}  // namespace vantage
