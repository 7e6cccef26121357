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

#ifndef STRAT_GAME_KUHN_POKER_H_
#define STRAT_GAME_KUHN_POKER_H_

#include <array>
#include <string>
#include <vector>

#include "strat/game/types.h"

namespace strat {

// Three-card Kuhn poker. Cards 0=J, 1=Q, 2=K; both players ante 1, a bet
// adds 1. Canonical action list: 0=Check, 1=Bet, 2=Call, 3=Fold.
// Terminal returns lie in {-2,-1,+1,+2}.
struct KuhnPokerState {
  static constexpr int kCheck = 0;
  static constexpr int kBet = 1;
  static constexpr int kCall = 2;
  static constexpr int kFold = 3;

  std::array<int, 2> cards{-1, -1};
  std::string bets;  // one char per action: c/b/k/f
  PlayerRole current = PlayerRole::kFirst;
  bool terminal = false;
  std::array<double, 2> total{0.0, 0.0};

  static KuhnPokerState New(uint64_t seed);
  static KuhnPokerState WithDeal(int first_card, int second_card);

  bool IsTerminal() const { return terminal; }
  PlayerRole Current() const { return current; }
  std::vector<Move> Legal() const;
  StepResult Apply(const Move& move);
  std::array<double, 2> Totals() const { return total; }
  std::string Observation(PlayerRole role) const;
  std::string Key(PlayerRole role) const;

  static char CardName(int card) { return "JQK"[card]; }
  static const char* ActionName(int id);
};

}  // namespace strat

#endif  // STRAT_GAME_KUHN_POKER_H_
