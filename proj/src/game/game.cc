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

#include "strat/game/game.h"

#include <algorithm>

#include "strat/core/error.h"
#include "strat/core/strings.h"

namespace strat {

namespace {

struct Registered {
  GameSpec spec;
  GameVariant (*make)(uint64_t seed);
};

const std::vector<Registered>& Registry() {
  static const std::vector<Registered>* registry = new std::vector<Registered>{
      {{"tic_tac_toe", 9, -1.0, 1.0, RewardSemantics::kZeroSum},
       [](uint64_t seed) { return GameVariant(TicTacToeState::New(seed)); }},
      {{"connect_four", 7, -1.0, 1.0, RewardSemantics::kZeroSum},
       [](uint64_t seed) { return GameVariant(ConnectFourState::New(seed)); }},
      {{"kuhn_poker", 4, -2.0, 2.0, RewardSemantics::kZeroSum},
       [](uint64_t seed) { return GameVariant(KuhnPokerState::New(seed)); }},
      {{"leduc_holdem", 3, -13.0, 13.0, RewardSemantics::kZeroSum},
       [](uint64_t seed) { return GameVariant(LeducHoldemState::New(seed)); }},
      {{"mini_hanabi", 10, 0.0, 4.0, RewardSemantics::kShared},
       [](uint64_t seed) {
         return GameVariant(HanabiState::New(MiniHanabiConfig(), seed));
       }},
      {{"simple_hanabi", 9, 0.0, 6.0, RewardSemantics::kShared},
       [](uint64_t seed) {
         return GameVariant(HanabiState::New(SimpleHanabiConfig(), seed));
       }},
  };
  return *registry;
}

const Registered& Find(const std::string& game_id) {
  for (const Registered& r : Registry()) {
    if (r.spec.name == game_id) return r;
  }
  throw UnknownGameError("unknown game: " + game_id);
}

}  // namespace

const GameSpec& LookupGameSpec(const std::string& game_id) {
  return Find(game_id).spec;
}

std::vector<std::string> RegisteredGames() {
  std::vector<std::string> names;
  for (const Registered& r : Registry()) names.push_back(r.spec.name);
  return names;
}

GameState NewGame(const std::string& game_id, uint64_t seed) {
  const Registered& r = Find(game_id);
  return GameState::Make(&r.spec, seed, r.make(seed));
}

GameState NewKuhnGameWithDeal(int first_card, int second_card) {
  const Registered& r = Find("kuhn_poker");
  return GameState::Make(&r.spec, 0,
                         KuhnPokerState::WithDeal(first_card, second_card));
}

GameState NewLeducGameWithDeal(int first_card, int second_card,
                               int board_card) {
  const Registered& r = Find("leduc_holdem");
  return GameState::Make(
      &r.spec, 0,
      LeducHoldemState::WithDeal(first_card, second_card, board_card));
}

GameState NewTicTacToeFromBoard(const std::string& board9) {
  const Registered& r = Find("tic_tac_toe");
  return GameState::Make(&r.spec, 0, TicTacToeState::FromBoard(board9));
}

bool GameState::IsTerminal() const {
  return std::visit([](const auto& s) { return s.IsTerminal(); }, impl_);
}

PlayerRole GameState::CurrentRole() const {
  if (IsTerminal()) {
    throw TerminalStateError("CurrentRole() on a terminal state");
  }
  return std::visit([](const auto& s) { return s.Current(); }, impl_);
}

std::vector<Move> GameState::LegalMoves() const {
  return std::visit([](const auto& s) { return s.Legal(); }, impl_);
}

std::array<double, 2> GameState::Returns() const {
  if (!IsTerminal()) {
    throw NotTerminalError("Returns() on a non-terminal state");
  }
  return std::visit([](const auto& s) { return s.Totals(); }, impl_);
}

std::string GameState::ObservationText(PlayerRole role) const {
  return std::visit([&](const auto& s) { return s.Observation(role); }, impl_);
}

std::string GameState::StateKey(PlayerRole role) const {
  return std::visit([&](const auto& s) { return s.Key(role); }, impl_);
}

std::string GameState::HistoryString() const {
  std::vector<std::string> displays;
  displays.reserve(history_.size());
  for (const Move& m : history_) displays.push_back(m.display);
  return Join(displays, ";");
}

std::vector<Move> LegalMoves(const GameState& state) {
  return state.LegalMoves();
}

std::pair<GameState, StepResult> ApplyMove(const GameState& state,
                                           const Move& move) {
  std::vector<Move> legal = state.LegalMoves();
  auto it = std::find_if(legal.begin(), legal.end(), [&](const Move& m) {
    return m.id == move.id && m.display == move.display;
  });
  if (it == legal.end()) {
    throw IllegalMoveError("illegal move '" + move.display + "' in " +
                           state.game_name());
  }
  GameState next = state;
  StepResult step =
      std::visit([&](auto& s) { return s.Apply(move); }, next.impl_);
  next.history_.push_back(move);
  return {std::move(next), step};
}

std::array<double, 2> Returns(const GameState& state) {
  return state.Returns();
}

std::string ObservationText(const GameState& state, PlayerRole role) {
  return state.ObservationText(role);
}

std::optional<Move> ParseMoveDisplay(const GameState& state,
                                     std::string_view text) {
  const std::string wanted = CollapseWhitespace(text);
  for (const Move& m : state.LegalMoves()) {
    if (CollapseWhitespace(m.display) == wanted) return m;
  }
  return std::nullopt;
}

}  // namespace strat
