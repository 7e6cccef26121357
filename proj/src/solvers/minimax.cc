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

#include "strat/solvers/minimax.h"

#include <string>
#include <unordered_map>

#include "strat/core/error.h"

namespace strat {

namespace {

struct SolveContext {
  std::unordered_map<std::string, int> memo;
  long nodes = 0;
  long budget = 0;
};

int Solve(const GameState& state, SolveContext* ctx) {
  if (state.IsTerminal()) return static_cast<int>(state.Returns()[0]);
  const std::string key = state.StateKey(state.CurrentRole());
  auto it = ctx->memo.find(key);
  if (it != ctx->memo.end()) return it->second;
  if (++ctx->nodes > ctx->budget) {
    throw GameTooLargeError("minimax node budget exceeded");
  }
  bool maximizing = state.CurrentRole() == PlayerRole::kFirst;
  int best = maximizing ? -2 : 2;
  for (const Move& m : state.LegalMoves()) {
    int v = Solve(ApplyMove(state, m).first, ctx);
    if (maximizing ? v > best : v < best) best = v;
  }
  ctx->memo[key] = best;
  return best;
}

}  // namespace

MinimaxResult MinimaxSolve(const GameState& state, long node_budget) {
  const std::string& game = state.game_name();
  if (game != "tic_tac_toe" && game != "connect_four") {
    throw GameTooLargeError("minimax requires a perfect-information game: " +
                            game);
  }
  if (state.IsTerminal()) {
    return {static_cast<int>(state.Returns()[0]), {}};
  }
  SolveContext ctx;
  ctx.budget = node_budget;
  MinimaxResult result;
  bool maximizing = state.CurrentRole() == PlayerRole::kFirst;
  int best = maximizing ? -2 : 2;
  std::vector<std::pair<Move, int>> children;
  for (const Move& m : state.LegalMoves()) {
    int v = Solve(ApplyMove(state, m).first, &ctx);
    children.emplace_back(m, v);
    if (maximizing ? v > best : v < best) best = v;
  }
  result.value = best;
  for (const auto& [m, v] : children) {
    if (v == best) result.optimal.push_back(m);
  }
  return result;
}

}  // namespace strat
