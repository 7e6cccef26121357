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

#include "strat/game/tic_tac_toe.h"

#include <algorithm>

#include "strat/core/error.h"

namespace strat {

namespace {

constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};

bool HasWin(const std::array<char, 9>& cells, char mark) {
  for (const auto& line : kLines) {
    if (cells[line[0]] == mark && cells[line[1]] == mark &&
        cells[line[2]] == mark) {
      return true;
    }
  }
  return false;
}

std::string CellDisplay(char mark, int id) {
  std::string s(1, mark);
  s += "(";
  s += std::to_string(id / 3);
  s += ",";
  s += std::to_string(id % 3);
  s += ")";
  return s;
}

}  // namespace

TicTacToeState TicTacToeState::New(uint64_t /*seed*/) {
  TicTacToeState s;
  s.cells.fill('.');
  return s;
}

TicTacToeState TicTacToeState::FromBoard(const std::string& board9) {
  if (board9.size() != 9) throw Error("board string must have 9 cells");
  TicTacToeState s;
  int xs = 0;
  int os = 0;
  for (int i = 0; i < 9; ++i) {
    char c = board9[i];
    if (c == 'X') {
      ++xs;
    } else if (c == 'O') {
      ++os;
    } else {
      c = '.';
    }
    s.cells[i] = c;
  }
  s.current = xs <= os ? PlayerRole::kFirst : PlayerRole::kSecond;
  if (HasWin(s.cells, 'X')) {
    s.terminal = true;
    s.total = {1.0, -1.0};
  } else if (HasWin(s.cells, 'O')) {
    s.terminal = true;
    s.total = {-1.0, 1.0};
  } else if (xs + os == 9) {
    s.terminal = true;
  }
  return s;
}

std::vector<Move> TicTacToeState::Legal() const {
  std::vector<Move> moves;
  if (terminal) return moves;
  char mark = Mark(current);
  for (int i = 0; i < 9; ++i) {
    if (cells[i] == '.') moves.push_back({i, CellDisplay(mark, i)});
  }
  return moves;
}

StepResult TicTacToeState::Apply(const Move& move) {
  char mark = Mark(current);
  cells[move.id] = mark;
  StepResult step;
  if (HasWin(cells, mark)) {
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

std::string TicTacToeState::BoardLines() const {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      char cell = cells[r * 3 + c];
      out += cell == '.' ? '_' : cell;
      if (c < 2) out += ' ';
    }
    out += '\n';
  }
  return out;
}

std::string TicTacToeState::Observation(PlayerRole role) const {
  std::string out =
      "Game: Tic-Tac-Toe. Players alternate placing their mark on a 3x3 "
      "grid. Three of your marks in a row, column, or diagonal win the game "
      "(+1 for the winner, -1 for the loser); a full board with no line is "
      "a draw (0 for both). Cells are addressed as (row,col) with row 0 at "
      "the top and col 0 on the left.\n";
  out += "You are ";
  out += Mark(role);
  out += ".\nBoard:\n";
  out += BoardLines();
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

std::string TicTacToeState::Key(PlayerRole /*role*/) const {
  std::string key = "ttt:";
  key.append(cells.begin(), cells.end());
  key += ':';
  key += terminal ? '-' : Mark(current);
  return key;
}

}  // namespace strat
