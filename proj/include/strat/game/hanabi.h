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

#ifndef STRAT_GAME_HANABI_H_
#define STRAT_GAME_HANABI_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "strat/game/types.h"

namespace strat {

// Two-player Hanabi variant with one copy of each (color, rank) card.
// mini_hanabi: 1 color, ranks 1-4, hand size 1 (max score 4).
// simple_hanabi: 2 colors, ranks 1-3, hand size 2 (max score 6).
// Both use 3 hint tokens and 1 life token. A successful play pays a shared
// +1; discarding is only allowed below full hint tokens; a misplay costs the
// single life and ends the game with the score banked so far. When the deck
// empties each player takes one final turn.
struct HanabiConfig {
  int colors = 1;
  int ranks = 4;
  int hand_size = 1;
  int hint_tokens = 3;
  int life_tokens = 1;

  int DeckSize() const { return colors * ranks; }
  int MaxScore() const { return colors * ranks; }
};

HanabiConfig MiniHanabiConfig();
HanabiConfig SimpleHanabiConfig();

struct HanabiCard {
  int color = 0;
  int rank = 0;  // 1-based

  bool operator==(const HanabiCard& o) const {
    return color == o.color && rank == o.rank;
  }
};

struct HanabiKnowledge {
  int known_rank = 0;    // 0 = unknown
  int known_color = -1;  // -1 = unknown
};

struct HanabiState {
  HanabiConfig config;
  std::vector<HanabiCard> deck;  // predetermined draw order; next_draw indexes
  int next_draw = 0;
  std::array<std::vector<HanabiCard>, 2> hands;
  std::array<std::vector<HanabiKnowledge>, 2> knowledge;
  std::vector<int> fireworks;  // highest rank played per color
  std::vector<HanabiCard> discards;
  int hints = 3;
  int lives = 1;
  int score = 0;
  int final_turns = -1;  // countdown once the deck is empty
  PlayerRole current = PlayerRole::kFirst;
  bool terminal = false;
  std::array<double, 2> total{0.0, 0.0};

  static HanabiState New(const HanabiConfig& config, uint64_t seed);

  bool IsTerminal() const { return terminal; }
  PlayerRole Current() const { return current; }
  std::vector<Move> Legal() const;
  StepResult Apply(const Move& move);
  std::array<double, 2> Totals() const { return total; }
  std::string Observation(PlayerRole role) const;
  std::string Key(PlayerRole role) const;

  // Canonical action ids: [0, hand_size) play, [hand_size, 2*hand_size)
  // discard, then hint-rank per rank, then hint-color per color (multi-color
  // configs only).
  int ActionSpaceSize() const;
  static const char* ColorName(int color);

 private:
  void DrawInto(int player);
  void FinishTurn();
};

}  // namespace strat

#endif  // STRAT_GAME_HANABI_H_
