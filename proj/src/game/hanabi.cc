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

#include "strat/game/hanabi.h"

#include <algorithm>
#include <random>

#include "strat/core/error.h"

namespace strat {

HanabiConfig MiniHanabiConfig() {
  return HanabiConfig{/*colors=*/1, /*ranks=*/4, /*hand_size=*/1,
                      /*hint_tokens=*/3, /*life_tokens=*/1};
}

HanabiConfig SimpleHanabiConfig() {
  return HanabiConfig{/*colors=*/2, /*ranks=*/3, /*hand_size=*/2,
                      /*hint_tokens=*/3, /*life_tokens=*/1};
}

const char* HanabiState::ColorName(int color) {
  return color == 0 ? "Red" : "Green";
}

int HanabiState::ActionSpaceSize() const {
  return 2 * config.hand_size + config.ranks +
         (config.colors > 1 ? config.colors : 0);
}

HanabiState HanabiState::New(const HanabiConfig& config, uint64_t seed) {
  HanabiState s;
  s.config = config;
  s.hints = config.hint_tokens;
  s.lives = config.life_tokens;
  s.fireworks.assign(config.colors, 0);
  for (int c = 0; c < config.colors; ++c) {
    for (int r = 1; r <= config.ranks; ++r) {
      s.deck.push_back({c, r});
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(s.deck.begin(), s.deck.end(), rng);
  for (int p = 0; p < 2; ++p) {
    for (int i = 0; i < config.hand_size; ++i) s.DrawInto(p);
  }
  return s;
}

void HanabiState::DrawInto(int player) {
  if (next_draw >= static_cast<int>(deck.size())) return;
  hands[player].push_back(deck[next_draw++]);
  knowledge[player].push_back(HanabiKnowledge{});
}

std::vector<Move> HanabiState::Legal() const {
  std::vector<Move> moves;
  if (terminal) return moves;
  int me = RoleIndex(current);
  int partner = 1 - me;
  int hand = static_cast<int>(hands[me].size());
  for (int i = 0; i < hand; ++i) {
    moves.push_back({i, "Play card " + std::to_string(i)});
  }
  if (hints < config.hint_tokens) {
    for (int i = 0; i < hand; ++i) {
      moves.push_back(
          {config.hand_size + i, "Discard card " + std::to_string(i)});
    }
  }
  if (hints > 0 && !hands[partner].empty()) {
    for (int r = 1; r <= config.ranks; ++r) {
      bool present = false;
      for (const auto& card : hands[partner]) present |= card.rank == r;
      if (present) {
        moves.push_back(
            {2 * config.hand_size + r - 1, "Hint rank " + std::to_string(r)});
      }
    }
    if (config.colors > 1) {
      for (int c = 0; c < config.colors; ++c) {
        bool present = false;
        for (const auto& card : hands[partner]) present |= card.color == c;
        if (present) {
          moves.push_back({2 * config.hand_size + config.ranks + c,
                           std::string("Hint color ") + ColorName(c)});
        }
      }
    }
  }
  return moves;
}

void HanabiState::FinishTurn() {
  if (!terminal && next_draw >= static_cast<int>(deck.size())) {
    final_turns = final_turns < 0 ? 2 : final_turns - 1;
    if (final_turns == 0) terminal = true;
  }
  current = Opponent(current);
}

StepResult HanabiState::Apply(const Move& move) {
  StepResult step;
  int me = RoleIndex(current);
  int partner = 1 - me;
  int id = move.id;

  if (id < config.hand_size) {
    HanabiCard card = hands[me][id];
    hands[me].erase(hands[me].begin() + id);
    knowledge[me].erase(knowledge[me].begin() + id);
    if (fireworks[card.color] + 1 == card.rank) {
      fireworks[card.color] = card.rank;
      ++score;
      step.rewards = {1.0, 1.0};
      if (score == config.MaxScore()) terminal = true;
    } else {
      discards.push_back(card);
      if (--lives == 0) terminal = true;
    }
    DrawInto(me);
  } else if (id < 2 * config.hand_size) {
    int slot = id - config.hand_size;
    discards.push_back(hands[me][slot]);
    hands[me].erase(hands[me].begin() + slot);
    knowledge[me].erase(knowledge[me].begin() + slot);
    hints = std::min(hints + 1, config.hint_tokens);
    DrawInto(me);
  } else if (id < 2 * config.hand_size + config.ranks) {
    int rank = id - 2 * config.hand_size + 1;
    --hints;
    for (size_t i = 0; i < hands[partner].size(); ++i) {
      if (hands[partner][i].rank == rank) {
        knowledge[partner][i].known_rank = rank;
      }
    }
  } else {
    int color = id - 2 * config.hand_size - config.ranks;
    --hints;
    for (size_t i = 0; i < hands[partner].size(); ++i) {
      if (hands[partner][i].color == color) {
        knowledge[partner][i].known_color = color;
      }
    }
  }

  FinishTurn();
  step.terminal = terminal;
  total[0] += step.rewards[0];
  total[1] += step.rewards[1];
  return step;
}

namespace {
std::string CardText(const HanabiCard& card, bool with_color) {
  std::string s;
  if (with_color) {
    s += HanabiState::ColorName(card.color);
    s += ' ';
  }
  s += std::to_string(card.rank);
  return s;
}
}  // namespace

std::string HanabiState::Observation(PlayerRole role) const {
  bool multi = config.colors > 1;
  std::string out = "Game: ";
  out += multi ? "Simple Hanabi" : "Mini Hanabi";
  out +=
      ". Cooperative card game: players share a score and cannot see their "
      "own cards. Play cards onto the fireworks in rank order (1 first); "
      "each successful play scores +1 for both players. Playing a wrong "
      "card costs the only life and ends the game. Hints cost a hint token "
      "and reveal all of the partner's cards of the named ";
  out += multi ? "rank or color" : "rank";
  out +=
      "; discarding regains a hint token. When the deck is empty each "
      "player takes one final turn.\n";
  out += "This deck has one copy of each ";
  out += multi ? "color/rank combination (2 colors, ranks 1-3)."
               : "rank 1-4 card (a single color).";
  out += "\n";

  int me = RoleIndex(role);
  int partner = 1 - me;
  out += "Fireworks: ";
  for (int c = 0; c < config.colors; ++c) {
    if (c) out += ", ";
    if (multi) {
      out += ColorName(c);
      out += ' ';
    }
    out += "at " + std::to_string(fireworks[c]);
  }
  out += ". Hint tokens: " + std::to_string(hints) +
         ". Lives: " + std::to_string(lives) +
         ". Deck remaining: " +
         std::to_string(static_cast<int>(deck.size()) - next_draw) + ".\n";
  out += "Discards: ";
  if (discards.empty()) {
    out += "(none)";
  } else {
    for (size_t i = 0; i < discards.size(); ++i) {
      if (i) out += ", ";
      out += CardText(discards[i], multi);
    }
  }
  out += "\nYour hand (hidden from you), slot by slot: ";
  if (hands[me].empty()) out += "(empty)";
  for (size_t i = 0; i < hands[me].size(); ++i) {
    if (i) out += ", ";
    out += "slot " + std::to_string(i) + " = ";
    const HanabiKnowledge& k = knowledge[me][i];
    if (multi) {
      out += k.known_color >= 0 ? ColorName(k.known_color) : "unknown color";
      out += ' ';
    }
    out += k.known_rank > 0 ? "rank " + std::to_string(k.known_rank)
                            : "unknown rank";
  }
  out += "\nPartner's hand: ";
  if (hands[partner].empty()) out += "(empty)";
  for (size_t i = 0; i < hands[partner].size(); ++i) {
    if (i) out += ", ";
    out += "slot " + std::to_string(i) + " = " +
           CardText(hands[partner][i], multi);
  }
  out += "\n";
  if (terminal) {
    out += "The game is over. Score: " + std::to_string(score) + ".\n";
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

std::string HanabiState::Key(PlayerRole role) const {
  int me = RoleIndex(role);
  int partner = 1 - me;
  std::string key = config.colors > 1 ? "shan:" : "mhan:";
  for (int f : fireworks) key += std::to_string(f);
  key += '|';
  key += std::to_string(hints);
  key += std::to_string(lives);
  key += std::to_string(static_cast<int>(deck.size()) - next_draw);
  key += std::to_string(final_turns + 1);
  key += '|';
  for (size_t i = 0; i < hands[me].size(); ++i) {
    const HanabiKnowledge& k = knowledge[me][i];
    key += static_cast<char>('0' + k.known_rank);
    key += static_cast<char>('a' + 1 + k.known_color);
  }
  key += '|';
  for (const auto& card : hands[partner]) {
    key += static_cast<char>('0' + card.rank);
    key += static_cast<char>('a' + card.color);
  }
  key += '|';
  std::vector<std::string> ds;
  for (const auto& card : discards) {
    ds.push_back(std::to_string(card.color) + std::to_string(card.rank));
  }
  std::sort(ds.begin(), ds.end());
  for (const auto& d : ds) key += d;
  key += '|';
  key += terminal ? '-' : static_cast<char>('0' + RoleIndex(current));
  return key;
}

}  // namespace strat
