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

#ifndef STRAT_GAME_TYPES_H_
#define STRAT_GAME_TYPES_H_

#include <array>
#include <string>

namespace strat {

enum class PlayerRole { kFirst = 0, kSecond = 1 };

inline int RoleIndex(PlayerRole role) { return static_cast<int>(role); }

inline PlayerRole Opponent(PlayerRole role) {
  return role == PlayerRole::kFirst ? PlayerRole::kSecond
                                    : PlayerRole::kFirst;
}

inline const char* RoleName(PlayerRole role) {
  return role == PlayerRole::kFirst ? "first" : "second";
}

struct Move {
  // Index into the game's canonical action list.
  int id = -1;
  // Canonical text rendering, e.g. "X(1,2)", "Bet", "Play card 0".
  std::string display;

  bool operator==(const Move& other) const {
    return id == other.id && display == other.display;
  }
};

struct StepResult {
  // Immediate environment reward per role, in game units.
  std::array<double, 2> rewards{0.0, 0.0};
  bool terminal = false;
};

enum class RewardSemantics { kZeroSum, kShared };

struct GameSpec {
  std::string name;
  int action_space_size = 0;
  // Bounds on realizable terminal returns, in game units.
  double min_return = 0.0;
  double max_return = 0.0;
  RewardSemantics semantics = RewardSemantics::kZeroSum;
};

}  // namespace strat

#endif  // STRAT_GAME_TYPES_H_
