// Copyright 2026 The Strat Harness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <map>

#include "doctest.h"
#include "strat/core/error.h"
#include "strat/core/rng.h"
#include "strat/solvers/best_response.h"
#include "strat/solvers/cfr.h"
#include "strat/solvers/kuhn_nash.h"
#include "strat/solvers/mcts.h"
#include "strat/solvers/minimax.h"

namespace strat {
namespace {

// Exact expected value to First of a Kuhn profile, by direct expectimax over
// all six deals and the betting tree. Independent of the best-response code.
double KuhnProfileValueFirst(const Bot& first, const Bot& second) {
  double total = 0.0;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      struct Frame {
        GameState state;
        double prob;
      };
      std::vector<Frame> stack{{NewKuhnGameWithDeal(c1, c2), 1.0 / 6.0}};
      while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.state.IsTerminal()) {
          total += f.prob * f.state.Returns()[0];
          continue;
        }
        const Bot& actor =
            f.state.CurrentRole() == PlayerRole::kFirst ? first : second;
        std::vector<Move> legal = f.state.LegalMoves();
        std::vector<double> probs = actor.Probabilities(f.state);
        for (size_t a = 0; a < legal.size(); ++a) {
          if (probs[a] <= 0.0) continue;
          stack.push_back(
              {ApplyMove(f.state, legal[a]).first, f.prob * probs[a]});
        }
      }
    }
  }
  return total;
}

TEST_CASE("minimax: empty tic_tac_toe is a draw") {
  MinimaxResult result = MinimaxSolve(NewGame("tic_tac_toe", 0));
  CHECK(result.value == 0);
  CHECK(result.optimal.size() == 9);  // every opening move preserves the draw
}

TEST_CASE("minimax: the case-study position is a first-player win at (1,2)") {
  MinimaxResult result = MinimaxSolve(NewTicTacToeFromBoard("O.OXX...."));
  CHECK(result.value == 1);
  REQUIRE(result.optimal.size() == 1);
  CHECK(result.optimal[0].display == "X(1,2)");
}

TEST_CASE("minimax: one move before a forced draw") {
  // Board X O X / X O O / O X _ ; X to move into the last cell, then draw.
  MinimaxResult result = MinimaxSolve(NewTicTacToeFromBoard("XOXXOOOX."));
  CHECK(result.value == 0);
  CHECK(result.optimal.size() == 1);
}

TEST_CASE("minimax rejects imperfect-information games") {
  CHECK_THROWS_AS(MinimaxSolve(NewKuhnGameWithDeal(0, 1)), GameTooLargeError);
}

TEST_CASE("mcts finds the immediate win for every seed") {
  GameState state = NewTicTacToeFromBoard("O.OXX....");
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Move m = MctsChoose(state, 1000, kDefaultUctExploration, seed);
    CHECK(m.display == "X(1,2)");
  }
}

TEST_CASE("mcts returns the only legal move without search") {
  GameState state = NewTicTacToeFromBoard("XOXXOOOX.");
  Move m = MctsChoose(state, 10, kDefaultUctExploration, 0);
  CHECK(m.id == 8);
}

TEST_CASE("mcts blocks an immediate connect-four threat") {
  // X: columns 0, 1, 6; O: three in column 3, winning next turn unless
  // blocked. The depth-2 oracle: every non-blocking X move allows an
  // immediate O win.
  GameState state = NewGame("connect_four", 0);
  for (int col : {0, 3, 1, 3, 6, 3}) {
    Move m;
    for (const Move& x : state.LegalMoves()) {
      if (x.id == col) m = x;
    }
    state = ApplyMove(state, m).first;
  }
  REQUIRE(state.CurrentRole() == PlayerRole::kFirst);
  // Depth-2 check that 3 is the unique non-losing column.
  for (const Move& m : state.LegalMoves()) {
    GameState after = ApplyMove(state, m).first;
    bool o_wins_next = false;
    for (const Move& o : after.LegalMoves()) {
      auto [next, step] = ApplyMove(after, o);
      o_wins_next |= step.terminal && next.Returns()[1] == 1.0;
    }
    CHECK(o_wins_next == (m.id != 3));
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Move m = MctsChoose(state, 100, kDefaultUctExploration, seed);
    CHECK(m.id == 3);
  }
}

TEST_CASE("mcts avoids minimax-losing moves on sampled positions") {
  std::mt19937_64 rng(31337);
  int tested = 0;
  while (tested < 25) {
    GameState state = NewGame("tic_tac_toe", 0);
    std::uniform_int_distribution<int> depth_dist(0, 6);
    int depth = depth_dist(rng);
    for (int d = 0; d < depth && !state.IsTerminal(); ++d) {
      std::vector<Move> legal = state.LegalMoves();
      std::uniform_int_distribution<size_t> pick(0, legal.size() - 1);
      state = ApplyMove(state, legal[pick(rng)]).first;
    }
    if (state.IsTerminal()) continue;
    ++tested;
    MinimaxResult solved = MinimaxSolve(state);
    bool maximizing = state.CurrentRole() == PlayerRole::kFirst;
    Move chosen = MctsChoose(state, 1000, kDefaultUctExploration, rng());
    int chosen_value =
        MinimaxSolve(ApplyMove(state, chosen).first).value;
    CHECK(chosen_value == solved.value);
    (void)maximizing;
  }
}

TEST_CASE("kuhn nash family has zero exploitability and value -1/18") {
  for (double alpha : {0.0, 0.1, 0.2, 1.0 / 3.0}) {
    auto [first, second] = KuhnNashBotPair(alpha);
    ExploitabilityReport report =
        Exploitability("kuhn_poker", *first, *second);
    CHECK(report.exploitability < 1e-9);
    CHECK(report.exploitability > -1e-12);
    double value = KuhnProfileValueFirst(*first, *second);
    CHECK(std::abs(value - (-1.0 / 18.0)) < 1e-12);
  }
}

TEST_CASE("alpha outside [0, 1/3] is rejected") {
  CHECK_THROWS_AS(KuhnNashBotPair(0.4), AlphaOutOfRangeError);
  CHECK_THROWS_AS(KuhnNashBotPair(-0.01), AlphaOutOfRangeError);
}

TEST_CASE("best response exploits a uniform-random second player") {
  auto random_bot = MakeRandomBot();
  BestResponseResult br =
      BestResponse("kuhn_poker", *random_bot, PlayerRole::kFirst);
  CHECK(br.value > 0.0);
}

TEST_CASE("best response against the equilibrium recovers the game value") {
  auto [first, second] = KuhnNashBotPair(1.0 / 3.0);
  BestResponseResult br =
      BestResponse("kuhn_poker", *first, PlayerRole::kSecond);
  CHECK(std::abs(br.value - 1.0 / 18.0) < 1e-12);
  BestResponseResult br_first =
      BestResponse("kuhn_poker", *second, PlayerRole::kFirst);
  CHECK(std::abs(br_first.value - (-1.0 / 18.0)) < 1e-12);
}

TEST_CASE("cfr after one iteration averages to uniform") {
  CfrTable table = CfrTrain("kuhn_poker", 1);
  CHECK(!table.entries.empty());
  for (const auto& [key, entry] : table.entries) {
    std::vector<double> avg =
        table.AverageStrategy(key, static_cast<int>(entry.regret_sum.size()));
    for (double p : avg) {
      CHECK(p == doctest::Approx(1.0 / avg.size()));
    }
  }
}

TEST_CASE("cfr converges on kuhn and exploitability shrinks monotonely") {
  std::map<long, double> expl_at;
  CfrConfig cfg = DefaultCfrConfig("kuhn_poker");
  cfg.checkpoint = [&](long it, const CfrTable& t) {
    auto first = MakeCfrAverageBot(t);
    auto second = MakeCfrAverageBot(t);
    expl_at[it] = Exploitability("kuhn_poker", *first, *second).exploitability;
  };
  CfrTable table = CfrTrain("kuhn_poker", 10000, cfg);
  CHECK(expl_at.at(10000) < 5e-3);
  // Non-increasing trend at 10x checkpoints (5% tolerance).
  CHECK(expl_at.at(100) <= expl_at.at(10) * 1.05);
  CHECK(expl_at.at(1000) <= expl_at.at(100) * 1.05);
  CHECK(expl_at.at(10000) <= expl_at.at(1000) * 1.05);
  for (const auto& [it, e] : expl_at) CHECK(e > -1e-12);
}

TEST_CASE("sampled cfr improves on leduc") {
  CfrConfig cfg;
  cfg.sample_chance = true;
  cfg.seed = 7;
  std::map<long, double> expl_at;
  cfg.checkpoint = [&](long it, const CfrTable& t) {
    if (it != 100 && it != 10000) return;
    auto first = MakeCfrAverageBot(t);
    auto second = MakeCfrAverageBot(t);
    expl_at[it] =
        Exploitability("leduc_holdem", *first, *second).exploitability;
  };
  CfrTrain("leduc_holdem", 10000, cfg);
  CHECK(expl_at.at(10000) < expl_at.at(100));
  CHECK(expl_at.at(10000) > -1e-12);
}

TEST_CASE("cfr table round-trips through its text format") {
  CfrTable table = CfrTrain("kuhn_poker", 50);
  std::string path = std::string(STRAT_TEST_TMPDIR) + "/kuhn.cfr";
  table.Save(path);
  CfrTable loaded = CfrTable::Load(path);
  CHECK(loaded.game == table.game);
  CHECK(loaded.iterations == table.iterations);
  REQUIRE(loaded.entries.size() == table.entries.size());
  for (const auto& [key, entry] : table.entries) {
    const CfrEntry& other = loaded.entries.at(key);
    for (size_t i = 0; i < entry.regret_sum.size(); ++i) {
      CHECK(other.regret_sum[i] == entry.regret_sum[i]);
      CHECK(other.strategy_sum[i] == entry.strategy_sum[i]);
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("unsupported cfr game") {
  CHECK_THROWS_AS(CfrTrain("tic_tac_toe", 10), UnsupportedGameError);
}

TEST_CASE("random bot reproduces its move sequence under the same seed") {
  auto bot = MakeRandomBot();
  for (int trial = 0; trial < 5; ++trial) {
    std::mt19937_64 rng_a(trial);
    std::mt19937_64 rng_b(trial);
    GameState a = NewGame("connect_four", trial);
    GameState b = NewGame("connect_four", trial);
    while (!a.IsTerminal()) {
      Move ma = bot->Choose(a, rng_a);
      Move mb = bot->Choose(b, rng_b);
      CHECK(ma.id == mb.id);
      a = ApplyMove(a, ma).first;
      b = ApplyMove(b, mb).first;
    }
  }
}

TEST_CASE("bot distributions are proper over the legal support") {
  auto [first, second] = KuhnNashBotPair(0.2);
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      GameState state = NewKuhnGameWithDeal(c1, c2);
      std::vector<double> probs = first->Probabilities(state);
      double sum = 0.0;
      for (double p : probs) {
        CHECK(p >= 0.0);
        sum += p;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

}  // namespace
}  // namespace strat
