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

#ifndef STRAT_SOLVERS_BOTS_H_
#define STRAT_SOLVERS_BOTS_H_

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "strat/game/game.h"

namespace strat {

// Static opponent. Strategy-backed bots expose a full action distribution;
// search-backed bots (MCTS, minimax) only choose.
class Bot {
 public:
  virtual ~Bot() = default;

  virtual std::string Name() const = 0;

  // Distribution over the current legal moves, in legal-move order.
  // Non-negative, sums to 1. Search bots throw UnsupportedGameError.
  virtual std::vector<double> Probabilities(const GameState& state) const;

  // Default: sample from Probabilities().
  virtual Move Choose(const GameState& state, std::mt19937_64& rng) const;
};

// Uniform over legal moves.
std::unique_ptr<Bot> MakeRandomBot();

// UCT search with uniform random rollouts; see mcts.h for the search entry
// point. Per-move search seeds are drawn from the caller's rng stream.
std::unique_ptr<Bot> MakeMctsBot(int simulations, double exploration);
std::unique_ptr<Bot> MakeMctsBot(int simulations);  // exploration = sqrt(2)

// Plays uniformly among minimax-optimal moves (perfect-information games
// with enumerable subtrees only).
std::unique_ptr<Bot> MakeMinimaxBot();

// Samples one move from a distribution.
Move SampleMove(const std::vector<Move>& legal,
                const std::vector<double>& probs, std::mt19937_64& rng);

}  // namespace strat

#endif  // STRAT_SOLVERS_BOTS_H_
