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

#ifndef STRAT_SOLVERS_MCTS_H_
#define STRAT_SOLVERS_MCTS_H_

#include <cstdint>

#include "strat/game/game.h"

namespace strat {

inline constexpr double kDefaultUctExploration = 1.4142135623730951;

// UCT over `simulations` playouts with uniform-random rollouts.
// Deterministic given the seed: unexpanded children are taken lowest move id
// first, UCB ties break toward the lowest move id, and the final selection
// is the most-visited child (ties again lowest id). Throws
// TerminalStateError on a terminal state.
Move MctsChoose(const GameState& state, int simulations, double exploration,
                uint64_t seed);

}  // namespace strat

#endif  // STRAT_SOLVERS_MCTS_H_
