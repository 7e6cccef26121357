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

#ifndef STRAT_GAME_LEDUC_HOLDEM_H_
#define STRAT_GAME_LEDUC_HOLDEM_H_

#include <array>
#include <string>
#include <vector>

#include "strat/game/types.h"

namespace strat {

// Leduc hold'em: 6-card deck (J, Q, K in two suits), ante 1, two betting
// rounds with raise sizes 2 and 4 and at most two raises per round; a public
// board card is revealed before round 2. Pairing the board beats everything
// else, then higher rank wins. Terminal returns lie in [-13, +13].
// Canonical action list: 0=Fold, 1=Call, 2=Raise (Call checks when there is
// nothing to call; Fold is only legal facing a raise).
struct LeducHoldemState {
  static constexpr int kFold = 0;
  static constexpr int kCall = 1;
  static constexpr int kRaise = 2;

  std::array<int, 2> cards{-1, -1};  // card = suit * 3 + rank
  int board_card = -1;
  bool board_revealed = false;
  int round = 0;                        // 0 or 1
  int raises_this_round = 0;
  std::array<double, 2> committed{1.0, 1.0};  // antes posted
  std::string actions;  // one char per action: f/c/r, '|' at round break
  PlayerRole current = PlayerRole::kFirst;
  bool terminal = false;
  std::array<double, 2> total{0.0, 0.0};

  static LeducHoldemState New(uint64_t seed);
  static LeducHoldemState WithDeal(int first_card, int second_card,
                                   int board_card);

  bool IsTerminal() const { return terminal; }
  PlayerRole Current() const { return current; }
  std::vector<Move> Legal() const;
  StepResult Apply(const Move& move);
  std::array<double, 2> Totals() const { return total; }
  std::string Observation(PlayerRole role) const;
  std::string Key(PlayerRole role) const;

  static int Rank(int card) { return card % 3; }
  static std::string CardName(int card);
  double OutstandingBet() const;

 private:
  void Showdown(StepResult* step);
  void EndRound(StepResult* step);
};

}  // namespace strat

#endif  // STRAT_GAME_LEDUC_HOLDEM_H_
