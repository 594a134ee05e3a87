#include <doctest.h>

#include "test_support.hpp"
#include "vantage/adversary.hpp"
#include "vantage/eval.hpp"

using namespace vantage;
using namespace testsupport;

namespace {

// Places one vantage point in the middle of each path.
class MidPathStrategy final : public AdaptiveStrategy {
 public:
  std::string name() const override { return "mid-path"; }
  int next(const GameView& view) override {
    int t = static_cast<int>(view.moves->size());
    return (t % view.k) * view.path_len + view.path_len / 2;
  }
};

class RepeatingStrategy final : public AdaptiveStrategy {
 public:
  std::string name() const override { return "repeating"; }
  int next(const GameView&) override { return 0; }
};

}  // namespace

TEST_CASE("hand-traced game: two 7-vertex paths, one mid-path point each") {
  MidPathStrategy strategy;
  GameTranscript t = play_adversary_game(14, 2, 2, strategy);
  CHECK_FALSE(t.fault);
  CHECK(t.lambda == std::vector<int>{1, 1});
  CHECK(t.alg_revealed == 4);  // two incident edges per fresh vantage point
  CHECK(t.opt_lower_bound == 6);
  CHECK(t.alpha == Rational(1));
  REQUIRE(t.beta.has_value());
  CHECK(*t.beta == make_rational(BigInt(6), BigInt(4)));
  CHECK(t.replay_ok);
  CHECK(t.witness_ok);
}

TEST_CASE("exhausting the whole graph reveals every edge") {
  auto strategy = make_strategy("first-vertex");
  GameTranscript t = play_adversary_game(12, 2, 12, *strategy);
  CHECK_FALSE(t.fault);
  CHECK(t.alg_revealed == 10);
  CHECK(t.alpha == Rational(6));
  REQUIRE(t.beta.has_value());
  CHECK(*t.beta <= Rational(1));
}

TEST_CASE("a repeating strategy faults the game") {
  RepeatingStrategy strategy;
  GameTranscript t = play_adversary_game(12, 2, 3, strategy);
  CHECK(t.fault);
  CHECK(t.moves.size() == 1);
}

TEST_CASE("untouched paths credit their full length") {
  // Budget 1 on two paths: one path stays untouched and contributes all
  // of its edges to the bound.
  auto strategy = make_strategy("first-vertex");
  GameTranscript t = play_adversary_game(12, 2, 1, *strategy);
  CHECK(t.lambda == std::vector<int>{1, 0});
  CHECK(t.claims[1] == 5);
  CHECK(t.witnesses[1] == 6);
  RevealReport probe = revealed_edges(gen_path_family(12, 2).graph, {6}, t.final_capacities);
  CHECK(static_cast<int>(probe.revealed.size()) == 5);
}

TEST_CASE("fully selected paths clamp to zero contribution") {
  // k = 1, budget = n: every vertex selected; the stretch clamps away.
  auto strategy = make_strategy("first-vertex");
  GameTranscript t = play_adversary_game(6, 1, 6, *strategy);
  CHECK(t.claims[0] == 0);
  CHECK(t.opt_lower_bound == 0);
}

TEST_CASE("adversary lower bound never overstates the true optimum") {
  for (const std::string& name : strategy_zoo()) {
    auto strategy = make_strategy(name, 17);
    GameTranscript t = play_adversary_game(24, 2, 4, *strategy);
    REQUIRE_FALSE(t.fault);
    BruteForceOptResult opt =
        brute_force_opt(gen_path_family(24, 2).graph, t.final_capacities, 2);
    CHECK(static_cast<long long>(opt.opt_count) >= t.opt_lower_bound);
  }
}

TEST_CASE("measure_tradeoff matches the transcript fields") {
  MidPathStrategy strategy;
  GameTranscript t = play_adversary_game(14, 2, 2, strategy);
  auto [alpha, beta] = measure_tradeoff(t);
  CHECK(alpha == t.alpha);
  REQUIRE(beta.has_value());
  CHECK(*beta == *t.beta);
}

TEST_CASE("seeded strategies replay identically") {
  auto a = make_strategy("seeded-random", 5);
  auto b = make_strategy("seeded-random", 5);
  GameTranscript ta = play_adversary_game(30, 3, 6, *a);
  GameTranscript tb = play_adversary_game(30, 3, 6, *b);
  REQUIRE(ta.moves.size() == tb.moves.size());
  for (std::size_t i = 0; i < ta.moves.size(); ++i) {
    CHECK(ta.moves[i].vertex == tb.moves[i].vertex);
  }
}

TEST_CASE("unknown strategy names are rejected") {
  CHECK_THROWS_AS(make_strategy("does-not-exist"), std::invalid_argument);
}
