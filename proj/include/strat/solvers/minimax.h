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

#ifndef STRAT_SOLVERS_MINIMAX_H_
#define STRAT_SOLVERS_MINIMAX_H_

#include <vector>

#include "strat/game/game.h"

namespace strat {

struct MinimaxResult {
  // Game-theoretic value from the first player's perspective, in {-1,0,+1}.
  int value = 0;
  // Moves achieving the current player's best outcome.
  std::vector<Move> optimal;
};

// Exhaustive solve with memoization on the position key. Perfect-information
// games only; throws GameTooLargeError past the node budget (full
// tic-tac-toe always fits; Connect Four only from late positions).
MinimaxResult MinimaxSolve(const GameState& state,
                           long node_budget = 20'000'000);

}  // namespace strat

#endif  // STRAT_SOLVERS_MINIMAX_H_
