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

#ifndef STRAT_GAME_GAME_H_
#define STRAT_GAME_GAME_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "strat/game/connect_four.h"
#include "strat/game/hanabi.h"
#include "strat/game/kuhn_poker.h"
#include "strat/game/leduc_holdem.h"
#include "strat/game/tic_tac_toe.h"
#include "strat/game/types.h"

namespace strat {

using GameVariant =
    std::variant<TicTacToeState, ConnectFourState, KuhnPokerState,
                 LeducHoldemState, HanabiState>;

// Immutable game position. Copying is cheap enough for search; all
// operations are pure given (state, seed): chance is pre-resolved into the
// state's seeded deal at construction, so replaying the same move sequence
// from the same seed reproduces identical states bit for bit.
class GameState {
 public:
  const GameSpec& spec() const { return *spec_; }
  const std::string& game_name() const { return spec_->name; }
  uint64_t seed() const { return seed_; }

  bool IsTerminal() const;

  // Role to act. Precondition: !IsTerminal().
  PlayerRole CurrentRole() const;

  // Legal actions for the current role; empty iff terminal.
  std::vector<Move> LegalMoves() const;

  // Final per-role returns in game units. Throws NotTerminalError.
  std::array<double, 2> Returns() const;

  // Deterministic prompt text for `role`: rules summary, public state, the
  // role's private information only, and the current legal move list.
  std::string ObservationText(PlayerRole role) const;

  // Canonical information-state key for `role` (used by tabular policies
  // and CFR). Two states are strategically indistinguishable to `role`
  // exactly when their keys match.
  std::string StateKey(PlayerRole role) const;

  // Agent moves applied so far, in order (chance outcomes excluded; they
  // are derivable from the seed).
  const std::vector<Move>& History() const { return history_; }

  // Move display strings joined by ";" — the replay-file serialization.
  std::string HistoryString() const;

  static GameState Make(const GameSpec* spec, uint64_t seed,
                        GameVariant impl) {
    return GameState(spec, seed, std::move(impl));
  }

  const GameVariant& impl() const { return impl_; }

 private:
  friend std::pair<GameState, StepResult> ApplyMove(const GameState& state,
                                                    const Move& move);

  GameState(const GameSpec* spec, uint64_t seed, GameVariant impl)
      : spec_(spec), seed_(seed), impl_(std::move(impl)) {}

  const GameSpec* spec_;
  uint64_t seed_;
  GameVariant impl_;
  std::vector<Move> history_;
};

// Registry ------------------------------------------------------------------

// Exact identifiers: tic_tac_toe, connect_four, kuhn_poker, leduc_holdem,
// mini_hanabi, simple_hanabi.
const GameSpec& LookupGameSpec(const std::string& game_id);
std::vector<std::string> RegisteredGames();

// Constructs the initial decision state, resolving every chance event up to
// the first decision (deals, shuffles) deterministically from `seed`.
// Throws UnknownGameError.
GameState NewGame(const std::string& game_id, uint64_t seed);

// Solver/test entry points with explicit chance outcomes.
GameState NewKuhnGameWithDeal(int first_card, int second_card);
GameState NewLeducGameWithDeal(int first_card, int second_card,
                               int board_card);

// Builds a tic-tac-toe position from a 9-char row-major board string
// ("O.OXX...."); the mark with fewer cells moves next.
GameState NewTicTacToeFromBoard(const std::string& board9);

// Operations ----------------------------------------------------------------

std::vector<Move> LegalMoves(const GameState& state);

// Applies a legal move, resolving any chance that follows (draws, board
// reveals). Throws IllegalMoveError if `move` is not in the legal set.
std::pair<GameState, StepResult> ApplyMove(const GameState& state,
                                           const Move& move);

std::array<double, 2> Returns(const GameState& state);

std::string ObservationText(const GameState& state, PlayerRole role);

// Resolves a canonical display string (after whitespace normalization)
// against the current legal move set.
std::optional<Move> ParseMoveDisplay(const GameState& state,
                                     std::string_view text);

}  // namespace strat

#endif  // STRAT_GAME_GAME_H_
