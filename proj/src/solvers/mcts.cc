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

#include "strat/solvers/mcts.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "strat/core/error.h"

namespace strat {

namespace {

struct Node {
  int parent = -1;
  Move move;                // edge from parent
  PlayerRole chooser;       // role that chose the edge
  int visits = 0;
  double value_sum = 0.0;   // returns from chooser's perspective
  std::vector<int> children;
  bool expanded = false;    // children enumerated
};

}  // namespace

Move MctsChoose(const GameState& root_state, int simulations,
                double exploration, uint64_t seed) {
  if (root_state.IsTerminal()) {
    throw TerminalStateError("MctsChoose on a terminal state");
  }
  std::vector<Move> root_legal = root_state.LegalMoves();
  if (root_legal.size() == 1) return root_legal[0];

  std::mt19937_64 rng(seed);
  std::vector<Node> tree(1);
  tree[0].chooser = root_state.CurrentRole();

  for (int sim = 0; sim < simulations; ++sim) {
    // Selection: walk down by UCB1 until a node with an untried child.
    int node = 0;
    GameState state = root_state;
    while (!state.IsTerminal()) {
      Node& n = tree[node];
      std::vector<Move> legal = state.LegalMoves();
      if (!n.expanded) {
        n.children.reserve(legal.size());
        n.expanded = true;
      }
      if (n.children.size() < legal.size()) {
        // Expand the lowest-id untried move.
        const Move& m = legal[n.children.size()];
        Node child;
        child.parent = node;
        child.move = m;
        child.chooser = state.CurrentRole();
        state = ApplyMove(state, m).first;
        tree.push_back(child);
        tree[node].children.push_back(static_cast<int>(tree.size()) - 1);
        node = static_cast<int>(tree.size()) - 1;
        break;
      }
      double log_n = std::log(static_cast<double>(n.visits));
      double best_score = -std::numeric_limits<double>::infinity();
      int best_child = -1;
      for (int c : n.children) {
        const Node& child = tree[c];
        double score = child.value_sum / child.visits +
                       exploration * std::sqrt(log_n / child.visits);
        if (score > best_score) {
          best_score = score;
          best_child = c;
        }
      }
      state = ApplyMove(state, tree[best_child].move).first;
      node = best_child;
    }

    // Rollout from the reached state, then backpropagate per-edge
    // perspectives.
    std::array<double, 2> returns;
    if (state.IsTerminal()) {
      returns = state.Returns();
    } else {
      GameState playout = state;
      while (!playout.IsTerminal()) {
        std::vector<Move> legal = playout.LegalMoves();
        std::uniform_int_distribution<size_t> pick(0, legal.size() - 1);
        playout = ApplyMove(playout, legal[pick(rng)]).first;
      }
      returns = playout.Returns();
    }
    for (int cur = node; cur >= 0; cur = tree[cur].parent) {
      Node& n = tree[cur];
      n.visits += 1;
      n.value_sum += returns[RoleIndex(n.chooser)];
    }
  }

  // Most visits wins; ties go to the lowest move id (children are stored in
  // legal-move order, which is id order).
  const Node& root = tree[0];
  int best_child = -1;
  int best_visits = -1;
  for (int c : root.children) {
    if (tree[c].visits > best_visits) {
      best_visits = tree[c].visits;
      best_child = c;
    }
  }
  if (best_child < 0) return root_legal[0];
  return tree[best_child].move;
}

}  // namespace strat
