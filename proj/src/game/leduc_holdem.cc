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

#include "strat/game/leduc_holdem.h"

#include <algorithm>
#include <random>

#include "strat/core/error.h"

namespace strat {

namespace {
constexpr double kRaiseSize[2] = {2.0, 4.0};
constexpr int kMaxRaisesPerRound = 2;

const char* ActionName(int id) {
  switch (id) {
    case LeducHoldemState::kFold:
      return "Fold";
    case LeducHoldemState::kCall:
      return "Call";
    case LeducHoldemState::kRaise:
      return "Raise";
  }
  return "?";
}

int ActionsThisRound(const std::string& actions) {
  int n = 0;
  for (auto it = actions.rbegin(); it != actions.rend() && *it != '|'; ++it) {
    ++n;
  }
  return n;
}
}  // namespace

std::string LeducHoldemState::CardName(int card) {
  std::string name(1, "JQK"[card % 3]);
  name += card / 3 == 0 ? 's' : 'h';
  return name;
}

LeducHoldemState LeducHoldemState::New(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<int, 6> deck = {0, 1, 2, 3, 4, 5};
  std::shuffle(deck.begin(), deck.end(), rng);
  return WithDeal(deck[0], deck[1], deck[2]);
}

LeducHoldemState LeducHoldemState::WithDeal(int first_card, int second_card,
                                            int board_card) {
  for (int c : {first_card, second_card, board_card}) {
    if (c < 0 || c > 5) throw Error("invalid Leduc card");
  }
  if (first_card == second_card || first_card == board_card ||
      second_card == board_card) {
    throw Error("duplicate Leduc cards");
  }
  LeducHoldemState s;
  s.cards = {first_card, second_card};
  s.board_card = board_card;
  return s;
}

double LeducHoldemState::OutstandingBet() const {
  return std::max(committed[0], committed[1]) - committed[RoleIndex(current)];
}

std::vector<Move> LeducHoldemState::Legal() const {
  std::vector<Move> moves;
  if (terminal) return moves;
  if (OutstandingBet() > 0) moves.push_back({kFold, ActionName(kFold)});
  moves.push_back({kCall, ActionName(kCall)});
  if (raises_this_round < kMaxRaisesPerRound) {
    moves.push_back({kRaise, ActionName(kRaise)});
  }
  return moves;
}

void LeducHoldemState::Showdown(StepResult* step) {
  terminal = true;
  int r0 = Rank(cards[0]);
  int r1 = Rank(cards[1]);
  int rb = Rank(board_card);
  int winner;
  if (r0 == rb) {
    winner = 0;
  } else if (r1 == rb) {
    winner = 1;
  } else if (r0 != r1) {
    winner = r0 > r1 ? 0 : 1;
  } else {
    return;  // split pot, both break even
  }
  double amount = committed[1 - winner];
  step->rewards[winner] = amount;
  step->rewards[1 - winner] = -amount;
}

// Round 2 opens with the opponent of the last round-1 actor so that the
// alternating-turn contract holds across the round boundary.
void LeducHoldemState::EndRound(StepResult* step) {
  if (round == 0) {
    round = 1;
    raises_this_round = 0;
    board_revealed = true;
    actions += '|';
  } else {
    Showdown(step);
  }
}

StepResult LeducHoldemState::Apply(const Move& move) {
  StepResult step;
  int actor = RoleIndex(current);
  int before_this_round = ActionsThisRound(actions);

  if (move.id == kFold) {
    actions += 'f';
    terminal = true;
    double amount = committed[actor];
    step.rewards[1 - actor] = amount;
    step.rewards[actor] = -amount;
  } else if (move.id == kCall) {
    double owed = OutstandingBet();
    committed[actor] += owed;
    actions += 'c';
    current = Opponent(current);
    if (owed > 0 || before_this_round >= 1) {
      EndRound(&step);
    }
  } else {
    committed[actor] += OutstandingBet() + kRaiseSize[round];
    ++raises_this_round;
    actions += 'r';
    current = Opponent(current);
  }

  step.terminal = terminal;
  total[0] += step.rewards[0];
  total[1] += step.rewards[1];
  return step;
}

std::string LeducHoldemState::Observation(PlayerRole role) const {
  std::string out =
      "Game: Leduc Hold'em. Six cards (J, Q, K in two suits); each player "
      "antes 1 chip and receives one private card. Round 1 is a betting "
      "round with raise size 2; then one public board card is revealed and "
      "round 2 is a betting round with raise size 4. At most two raises per "
      "round. At showdown, pairing the board card wins; otherwise the "
      "higher rank wins, and equal ranks split the pot.\n";
  out += "You are the ";
  out += role == PlayerRole::kFirst ? "first" : "second";
  out += " player. Your private card: ";
  out += CardName(cards[RoleIndex(role)]);
  out += ".\nBoard card: ";
  out += board_revealed ? CardName(board_card) : "(not yet revealed)";
  out += "\nPot: you have committed " +
         std::to_string(static_cast<int>(committed[RoleIndex(role)])) +
         ", your opponent " +
         std::to_string(static_cast<int>(committed[1 - RoleIndex(role)])) +
         " chips.\nBetting history: ";
  if (actions.empty()) {
    out += "(none)";
  } else {
    std::string history;
    for (char a : actions) {
      if (a == '|') {
        history += " | board revealed | ";
        continue;
      }
      if (!history.empty() && history.back() != ' ') history += ", ";
      switch (a) {
        case 'c':
          history += "Call";
          break;
        case 'r':
          history += "Raise";
          break;
        case 'f':
          history += "Fold";
          break;
      }
    }
    out += history;
  }
  out += "\n";
  if (terminal) {
    out += "The hand is over.\n";
  } else {
    out += "It is the ";
    out += current == PlayerRole::kFirst ? "first" : "second";
    out += " player's turn.\nLegal moves: ";
    bool first = true;
    for (const Move& m : Legal()) {
      if (!first) out += ", ";
      out += m.display;
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string LeducHoldemState::Key(PlayerRole role) const {
  std::string key = "leduc:";
  key += CardName(cards[RoleIndex(role)]);
  key += '|';
  key += board_revealed ? CardName(board_card) : std::string("-");
  key += '|';
  key += actions;
  return key;
}

}  // namespace strat
