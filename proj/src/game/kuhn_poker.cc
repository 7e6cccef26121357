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

#include "strat/game/kuhn_poker.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "strat/core/error.h"

namespace strat {

const char* KuhnPokerState::ActionName(int id) {
  switch (id) {
    case kCheck:
      return "Check";
    case kBet:
      return "Bet";
    case kCall:
      return "Call";
    case kFold:
      return "Fold";
  }
  return "?";
}

KuhnPokerState KuhnPokerState::New(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<int, 3> deck = {0, 1, 2};
  std::shuffle(deck.begin(), deck.end(), rng);
  return WithDeal(deck[0], deck[1]);
}

KuhnPokerState KuhnPokerState::WithDeal(int first_card, int second_card) {
  if (first_card == second_card || first_card < 0 || first_card > 2 ||
      second_card < 0 || second_card > 2) {
    throw Error("invalid Kuhn deal");
  }
  KuhnPokerState s;
  s.cards = {first_card, second_card};
  return s;
}

std::vector<Move> KuhnPokerState::Legal() const {
  std::vector<Move> moves;
  if (terminal) return moves;
  bool facing_bet = !bets.empty() && bets.back() == 'b';
  if (facing_bet) {
    moves.push_back({kCall, ActionName(kCall)});
    moves.push_back({kFold, ActionName(kFold)});
  } else {
    moves.push_back({kCheck, ActionName(kCheck)});
    moves.push_back({kBet, ActionName(kBet)});
  }
  return moves;
}

StepResult KuhnPokerState::Apply(const Move& move) {
  constexpr char kLetters[] = {'c', 'b', 'k', 'f'};
  bets += kLetters[move.id];
  StepResult step;

  auto settle = [&](int winner, double amount) {
    terminal = true;
    step.rewards[winner] = amount;
    step.rewards[1 - winner] = -amount;
  };

  int actor = RoleIndex(current);
  if (move.id == kFold) {
    // Folder forfeits the ante (1); the bettor's extra chip comes back.
    settle(1 - actor, 1.0);
  } else if (bets == "cc") {
    settle(cards[0] > cards[1] ? 0 : 1, 1.0);
  } else if (move.id == kCall) {
    settle(cards[0] > cards[1] ? 0 : 1, 2.0);
  }
  step.terminal = terminal;
  total[0] += step.rewards[0];
  total[1] += step.rewards[1];
  current = Opponent(current);
  return step;
}

std::string KuhnPokerState::Observation(PlayerRole role) const {
  std::string out =
      "Game: Kuhn Poker. Three cards J < Q < K; each player antes 1 chip "
      "and is dealt one private card. The first player may Check or Bet 1 "
      "chip; facing a bet a player may Call or Fold. Two checks or a call "
      "end the hand with a showdown won by the higher card; a fold "
      "concedes the pot.\n";
  out += "You are the ";
  out += role == PlayerRole::kFirst ? "first" : "second";
  out += " player. Your private card: ";
  out += CardName(cards[RoleIndex(role)]);
  out += ".\nBetting history: ";
  if (bets.empty()) {
    out += "(none)";
  } else {
    std::string history;
    for (char b : bets) {
      if (!history.empty()) history += ", ";
      switch (b) {
        case 'c':
          history += "Check";
          break;
        case 'b':
          history += "Bet";
          break;
        case 'k':
          history += "Call";
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

std::string KuhnPokerState::Key(PlayerRole role) const {
  std::string key = "kuhn:";
  key += CardName(cards[RoleIndex(role)]);
  key += '|';
  key += bets;
  return key;
}

}  // namespace strat
