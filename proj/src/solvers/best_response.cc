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

#include "strat/solvers/best_response.h"

#include <vector>

#include "strat/core/error.h"

namespace strat {

namespace {

struct WeightedState {
  GameState state;
  double weight;  // chance reach x opponent reach
};

struct Roots {
  std::vector<GameState> states;
  double chance_prob = 1.0;
};

Roots EnumerateRoots(const std::string& game) {
  Roots roots;
  if (game == "kuhn_poker") {
    for (int c1 = 0; c1 < 3; ++c1) {
      for (int c2 = 0; c2 < 3; ++c2) {
        if (c1 != c2) roots.states.push_back(NewKuhnGameWithDeal(c1, c2));
      }
    }
  } else if (game == "leduc_holdem") {
    for (int c1 = 0; c1 < 6; ++c1) {
      for (int c2 = 0; c2 < 6; ++c2) {
        for (int b = 0; b < 6; ++b) {
          if (c1 != c2 && c1 != b && c2 != b) {
            roots.states.push_back(NewLeducGameWithDeal(c1, c2, b));
          }
        }
      }
    }
  } else if (game == "tic_tac_toe") {
    roots.states.push_back(NewGame("tic_tac_toe", 0));
  } else {
    throw GameTooLargeError(
        "best response requires enumerable information states: " + game);
  }
  roots.chance_prob = 1.0 / roots.states.size();
  return roots;
}

// A history is identified by both roles' information-state keys, which
// together pin down the private chance and the public sequence.
std::string FullKey(const GameState& state) {
  return state.StateKey(PlayerRole::kFirst) + "##" +
         state.StateKey(PlayerRole::kSecond);
}

class BestResponder {
 public:
  BestResponder(const Bot& opponent, PlayerRole role)
      : opponent_(opponent), role_(role) {}

  // Collects every responder decision node grouped by information state,
  // weighting each history by chance reach x opponent reach. Level-order
  // expansion merges transpositions (same full state at the same depth)
  // before expanding, so merged weights propagate downstream.
  void Collect(const std::vector<GameState>& roots, double chance_prob) {
    std::unordered_map<std::string, WeightedState> level;
    for (const GameState& root : roots) {
      auto [it, fresh] =
          level.try_emplace(FullKey(root), WeightedState{root, chance_prob});
      if (!fresh) it->second.weight += chance_prob;
    }
    while (!level.empty()) {
      std::unordered_map<std::string, WeightedState> next;
      auto push = [&next](GameState&& s, double w) {
        std::string key = FullKey(s);
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(std::move(key), WeightedState{std::move(s), w});
        } else {
          it->second.weight += w;
        }
      };
      for (auto& [key, ws] : level) {
        if (ws.state.IsTerminal()) continue;
        if (ws.state.CurrentRole() == role_) {
          infosets_[ws.state.StateKey(role_)].push_back(ws);
          for (const Move& m : ws.state.LegalMoves()) {
            push(ApplyMove(ws.state, m).first, ws.weight);
          }
        } else {
          std::vector<Move> legal = ws.state.LegalMoves();
          std::vector<double> probs = opponent_.Probabilities(ws.state);
          for (size_t a = 0; a < legal.size(); ++a) {
            if (probs[a] <= 0.0) continue;
            push(ApplyMove(ws.state, legal[a]).first,
                 ws.weight * probs[a]);
          }
        }
      }
      level = std::move(next);
    }
  }

  int BestAction(const std::string& key) {
    auto cached = best_action_.find(key);
    if (cached != best_action_.end()) return cached->second;
    const std::vector<WeightedState>& histories = infosets_.at(key);
    const std::vector<Move> legal = histories.front().state.LegalMoves();
    double best_q = 0.0;
    int best_id = -1;
    for (const Move& m : legal) {
      double q = 0.0;
      for (const WeightedState& h : histories) {
        q += h.weight * Value(ApplyMove(h.state, m).first);
      }
      if (best_id < 0 || q > best_q) {
        best_q = q;
        best_id = m.id;
      }
    }
    best_action_[key] = best_id;
    return best_id;
  }

  // Expected responder value of a single history under (best response,
  // opponent).
  double Value(const GameState& state) {
    if (state.IsTerminal()) return state.Returns()[RoleIndex(role_)];
    const std::string memo_key = FullKey(state);
    auto cached = value_memo_.find(memo_key);
    if (cached != value_memo_.end()) return cached->second;
    double value = 0.0;
    std::vector<Move> legal = state.LegalMoves();
    if (state.CurrentRole() == role_) {
      int best = BestAction(state.StateKey(role_));
      for (const Move& m : legal) {
        if (m.id == best) {
          value = Value(ApplyMove(state, m).first);
          break;
        }
      }
    } else {
      std::vector<double> probs = opponent_.Probabilities(state);
      for (size_t a = 0; a < legal.size(); ++a) {
        if (probs[a] <= 0.0) continue;
        value += probs[a] * Value(ApplyMove(state, legal[a]).first);
      }
    }
    value_memo_[memo_key] = value;
    return value;
  }

  BestResponseResult Run(const Roots& roots) {
    Collect(roots.states, roots.chance_prob);
    BestResponseResult result;
    for (const auto& [key, histories] : infosets_) {
      result.policy[key] = BestAction(key);
    }
    for (const GameState& root : roots.states) {
      result.value += roots.chance_prob * Value(root);
    }
    return result;
  }

 private:
  const Bot& opponent_;
  PlayerRole role_;
  std::unordered_map<std::string, std::vector<WeightedState>> infosets_;
  std::unordered_map<std::string, int> best_action_;
  std::unordered_map<std::string, double> value_memo_;
};

class BestResponseBot : public Bot {
 public:
  BestResponseBot(BestResponseResult result, std::string name)
      : result_(std::move(result)), name_(std::move(name)) {}

  std::string Name() const override { return name_; }

  std::vector<double> Probabilities(const GameState& state) const override {
    std::vector<Move> legal = state.LegalMoves();
    std::vector<double> probs(legal.size(), 0.0);
    auto it = result_.policy.find(state.StateKey(state.CurrentRole()));
    if (it == result_.policy.end()) {
      std::fill(probs.begin(), probs.end(), 1.0 / probs.size());
      return probs;
    }
    for (size_t a = 0; a < legal.size(); ++a) {
      if (legal[a].id == it->second) probs[a] = 1.0;
    }
    return probs;
  }

 private:
  BestResponseResult result_;
  std::string name_;
};

}  // namespace

BestResponseResult BestResponse(const std::string& game, const Bot& opponent,
                                PlayerRole role) {
  Roots roots = EnumerateRoots(game);
  BestResponder responder(opponent, role);
  return responder.Run(roots);
}

std::unique_ptr<Bot> MakeBestResponseBot(BestResponseResult result,
                                         std::string name) {
  return std::make_unique<BestResponseBot>(std::move(result), std::move(name));
}

ExploitabilityReport Exploitability(const std::string& game, const Bot& first,
                                    const Bot& second) {
  ExploitabilityReport report;
  report.best_response_first =
      BestResponse(game, second, PlayerRole::kFirst).value;
  report.best_response_second =
      BestResponse(game, first, PlayerRole::kSecond).value;
  report.exploitability =
      (report.best_response_first + report.best_response_second) / 2.0;
  return report;
}

}  // namespace strat
