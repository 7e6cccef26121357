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

#include "strat/game/connect_four.h"

#include <algorithm>

namespace strat {

namespace {

bool WinsThrough(const ConnectFourState& s, int row, int col, char mark) {
  constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (const auto& d : kDirs) {
    int run = 1;
    for (int sign : {1, -1}) {
      int r = row + sign * d[0];
      int c = col + sign * d[1];
      while (r >= 0 && r < ConnectFourState::kRows && c >= 0 &&
             c < ConnectFourState::kCols && s.At(r, c) == mark) {
        ++run;
        r += sign * d[0];
        c += sign * d[1];
      }
    }
    if (run >= 4) return true;
  }
  return false;
}

}  // namespace

ConnectFourState ConnectFourState::New(uint64_t /*seed*/) {
  ConnectFourState s;
  s.cells.fill('.');
  return s;
}

std::vector<Move> ConnectFourState::Legal() const {
  std::vector<Move> moves;
  if (terminal) return moves;
  for (int c = 0; c < kCols; ++c) {
    if (At(kRows - 1, c) == '.') {
      moves.push_back({c, "Drop(" + std::to_string(c) + ")"});
    }
  }
  return moves;
}

StepResult ConnectFourState::Apply(const Move& move) {
  int col = move.id;
  int row = 0;
  while (At(row, col) != '.') ++row;
  char mark = Mark(current);
  cells[row * kCols + col] = mark;
  StepResult step;
  if (WinsThrough(*this, row, col, mark)) {
    terminal = true;
    double win = current == PlayerRole::kFirst ? 1.0 : -1.0;
    step.rewards = {win, -win};
  } else if (std::count(cells.begin(), cells.end(), '.') == 0) {
    terminal = true;
  }
  step.terminal = terminal;
  total[0] += step.rewards[0];
  total[1] += step.rewards[1];
  current = Opponent(current);
  return step;
}

std::string ConnectFourState::Observation(PlayerRole role) const {
  std::string out =
      "Game: Connect Four. Players alternate dropping a disc into one of 7 "
      "columns on a 6-row board; the disc falls to the lowest empty cell. "
      "Four of your discs in a row, column, or diagonal win (+1/-1); a full "
      "board is a draw. Columns are numbered 0-6 from the left.\n";
  out += "You are ";
  out += Mark(role);
  out += ".\nBoard (top row first):\n";
  for (int r = kRows - 1; r >= 0; --r) {
    for (int c = 0; c < kCols; ++c) {
      out += At(r, c) == '.' ? '_' : At(r, c);
      if (c < kCols - 1) out += ' ';
    }
    out += '\n';
  }
  if (terminal) {
    out += "The game is over.\n";
  } else {
    out += "Player ";
    out += Mark(current);
    out += " to move.\nLegal moves: ";
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

std::string ConnectFourState::Key(PlayerRole /*role*/) const {
  std::string key = "c4:";
  key.append(cells.begin(), cells.end());
  key += ':';
  key += terminal ? '-' : Mark(current);
  return key;
}

}  // namespace strat
