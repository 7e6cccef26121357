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

#ifndef STRAT_GAME_TIC_TAC_TOE_H_
#define STRAT_GAME_TIC_TAC_TOE_H_

#include <array>
#include <string>
#include <vector>

#include "strat/game/types.h"

namespace strat {

// 3x3 board. First plays X, Second plays O. Move id = row * 3 + col,
// display "X(r,c)" / "O(r,c)".
struct TicTacToeState {
  std::array<char, 9> cells;  // 'X', 'O' or '.'
  PlayerRole current = PlayerRole::kFirst;
  bool terminal = false;
  std::array<double, 2> total{0.0, 0.0};

  static TicTacToeState New(uint64_t seed);
  // Builds a position from a 9-char board string ("O.OXX...." row-major);
  // the mark with fewer cells on the board moves next.
  static TicTacToeState FromBoard(const std::string& board9);

  bool IsTerminal() const { return terminal; }
  PlayerRole Current() const { return current; }
  std::vector<Move> Legal() const;
  StepResult Apply(const Move& move);
  std::array<double, 2> Totals() const { return total; }
  std::string Observation(PlayerRole role) const;
  std::string Key(PlayerRole role) const;
  std::string BoardLines() const;

  static char Mark(PlayerRole role) {
    return role == PlayerRole::kFirst ? 'X' : 'O';
  }
};

}  // namespace strat

#endif  // STRAT_GAME_TIC_TAC_TOE_H_
