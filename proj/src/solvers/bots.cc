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

#include "strat/solvers/bots.h"

#include "strat/core/error.h"
#include "strat/solvers/mcts.h"
#include "strat/solvers/minimax.h"

namespace strat {

std::vector<double> Bot::Probabilities(const GameState& /*state*/) const {
  throw UnsupportedGameError("bot '" + Name() +
                             "' does not expose an action distribution");
}

Move SampleMove(const std::vector<Move>& legal,
                const std::vector<double>& probs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = u(rng);
  double acc = 0.0;
  for (size_t a = 0; a < legal.size(); ++a) {
    acc += probs[a];
    if (x < acc) return legal[a];
  }
  return legal.back();
}

Move Bot::Choose(const GameState& state, std::mt19937_64& rng) const {
  std::vector<Move> legal = state.LegalMoves();
  if (legal.empty()) throw TerminalStateError("bot asked to act at terminal");
  return SampleMove(legal, Probabilities(state), rng);
}

namespace {

class RandomBot : public Bot {
 public:
  std::string Name() const override { return "random"; }

  std::vector<double> Probabilities(const GameState& state) const override {
    size_t n = state.LegalMoves().size();
    return std::vector<double>(n, 1.0 / n);
  }
};

class MctsBot : public Bot {
 public:
  MctsBot(int simulations, double exploration)
      : simulations_(simulations), exploration_(exploration) {}

  std::string Name() const override {
    return "mcts(" + std::to_string(simulations_) + ")";
  }

  Move Choose(const GameState& state, std::mt19937_64& rng) const override {
    return MctsChoose(state, simulations_, exploration_, rng());
  }

 private:
  int simulations_;
  double exploration_;
};

class MinimaxBot : public Bot {
 public:
  std::string Name() const override { return "minimax"; }

  Move Choose(const GameState& state, std::mt19937_64& rng) const override {
    MinimaxResult result = MinimaxSolve(state);
    std::uniform_int_distribution<size_t> pick(0, result.optimal.size() - 1);
    return result.optimal[pick(rng)];
  }
};

}  // namespace

std::unique_ptr<Bot> MakeRandomBot() { return std::make_unique<RandomBot>(); }

std::unique_ptr<Bot> MakeMctsBot(int simulations, double exploration) {
  return std::make_unique<MctsBot>(simulations, exploration);
}

std::unique_ptr<Bot> MakeMctsBot(int simulations) {
  return MakeMctsBot(simulations, kDefaultUctExploration);
}

std::unique_ptr<Bot> MakeMinimaxBot() {
  return std::make_unique<MinimaxBot>();
}

}  // namespace strat
