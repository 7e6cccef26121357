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

#include "strat/solvers/cfr.h"

#include <fstream>
#include <random>
#include <sstream>

#include "strat/core/error.h"
#include "strat/core/strings.h"

namespace strat {

namespace {

std::vector<double> RegretMatch(const std::vector<double>& regrets) {
  std::vector<double> strategy(regrets.size());
  double positive = 0.0;
  for (double r : regrets) positive += r > 0 ? r : 0.0;
  if (positive <= 0.0) {
    std::fill(strategy.begin(), strategy.end(), 1.0 / regrets.size());
  } else {
    for (size_t i = 0; i < regrets.size(); ++i) {
      strategy[i] = regrets[i] > 0 ? regrets[i] / positive : 0.0;
    }
  }
  return strategy;
}

struct DealSet {
  std::vector<GameState> roots;
  double chance_prob = 1.0;
};

DealSet EnumerateDeals(const std::string& game) {
  DealSet deals;
  if (game == "kuhn_poker") {
    for (int c1 = 0; c1 < 3; ++c1) {
      for (int c2 = 0; c2 < 3; ++c2) {
        if (c1 != c2) deals.roots.push_back(NewKuhnGameWithDeal(c1, c2));
      }
    }
  } else if (game == "leduc_holdem") {
    for (int c1 = 0; c1 < 6; ++c1) {
      for (int c2 = 0; c2 < 6; ++c2) {
        for (int b = 0; b < 6; ++b) {
          if (c1 != c2 && c1 != b && c2 != b) {
            deals.roots.push_back(NewLeducGameWithDeal(c1, c2, b));
          }
        }
      }
    }
  } else {
    throw UnsupportedGameError("CFR supports kuhn_poker and leduc_holdem: " +
                               game);
  }
  deals.chance_prob = 1.0 / deals.roots.size();
  return deals;
}

class CfrSolver {
 public:
  explicit CfrSolver(CfrTable* table) : table_(table) {}

  // Returns utility for the first player under the current profile;
  // accumulates counterfactual regrets and strategy weights for both roles.
  double Walk(const GameState& state, double reach0, double reach1,
              double chance_reach) {
    if (state.IsTerminal()) return state.Returns()[0];
    const PlayerRole role = state.CurrentRole();
    const int player = RoleIndex(role);
    const std::vector<Move> legal = state.LegalMoves();
    const std::string key = state.StateKey(role);

    CfrEntry& entry = (*table_)
                          .entries.try_emplace(key, CfrEntry{
                              std::vector<double>(legal.size(), 0.0),
                              std::vector<double>(legal.size(), 0.0)})
                          .first->second;
    std::vector<double> strategy = RegretMatch(entry.regret_sum);

    double node_value = 0.0;
    std::vector<double> action_values(legal.size(), 0.0);
    for (size_t a = 0; a < legal.size(); ++a) {
      GameState child = ApplyMove(state, legal[a]).first;
      double v = player == 0
                     ? Walk(child, reach0 * strategy[a], reach1, chance_reach)
                     : Walk(child, reach0, reach1 * strategy[a], chance_reach);
      action_values[a] = v;
      node_value += strategy[a] * v;
    }

    // Counterfactual regret weights by the opponent's and chance's reach;
    // strategy accumulation by the player's own reach.
    const double own_reach = player == 0 ? reach0 : reach1;
    const double opp_reach = player == 0 ? reach1 : reach0;
    const double sign = player == 0 ? 1.0 : -1.0;
    CfrEntry& e = table_->entries.at(key);
    for (size_t a = 0; a < legal.size(); ++a) {
      e.regret_sum[a] +=
          chance_reach * opp_reach * sign * (action_values[a] - node_value);
      e.strategy_sum[a] += own_reach * strategy[a];
    }
    return node_value;
  }

 private:
  CfrTable* table_;
};

}  // namespace

std::vector<double> CfrTable::AverageStrategy(const std::string& key,
                                              int n_actions) const {
  std::vector<double> avg(n_actions, 1.0 / n_actions);
  auto it = entries.find(key);
  if (it == entries.end()) return avg;
  double total = 0.0;
  for (double w : it->second.strategy_sum) total += w;
  if (total <= 0.0) return avg;
  for (int a = 0; a < n_actions; ++a) {
    avg[a] = it->second.strategy_sum[a] / total;
  }
  return avg;
}

CfrConfig DefaultCfrConfig(const std::string& game) {
  CfrConfig cfg;
  cfg.sample_chance = game == "leduc_holdem";
  return cfg;
}

CfrTable CfrTrain(const std::string& game, long iterations,
                  const CfrConfig& config) {
  if (iterations < 1) throw Error("iterations must be positive");
  DealSet deals = EnumerateDeals(game);
  CfrTable table;
  table.game = game;
  CfrSolver solver(&table);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<size_t> pick(0, deals.roots.size() - 1);

  long next_checkpoint = 10;
  for (long it = 1; it <= iterations; ++it) {
    if (config.sample_chance) {
      solver.Walk(deals.roots[pick(rng)], 1.0, 1.0, 1.0);
    } else {
      for (const GameState& root : deals.roots) {
        solver.Walk(root, 1.0, 1.0, deals.chance_prob);
      }
    }
    table.iterations = it;
    if (config.checkpoint && (it == next_checkpoint || it == iterations)) {
      config.checkpoint(it, table);
      while (next_checkpoint <= it) next_checkpoint *= 10;
    }
  }
  return table;
}

CfrTable CfrTrain(const std::string& game, long iterations) {
  return CfrTrain(game, iterations, DefaultCfrConfig(game));
}

void CfrTable::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw Error("cannot write CFR table: " + path);
  out << "game\t" << game << "\titerations\t" << iterations << "\n";
  // Deterministic output order.
  std::vector<std::string> keys;
  keys.reserve(entries.size());
  for (const auto& [key, entry] : entries) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  out.precision(17);
  for (const std::string& key : keys) {
    const CfrEntry& entry = entries.at(key);
    out << key << '\t';
    for (size_t i = 0; i < entry.regret_sum.size(); ++i) {
      if (i) out << ' ';
      out << entry.regret_sum[i];
    }
    out << '\t';
    for (size_t i = 0; i < entry.strategy_sum.size(); ++i) {
      if (i) out << ' ';
      out << entry.strategy_sum[i];
    }
    out << '\n';
  }
}

CfrTable CfrTable::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw Error("cannot read CFR table: " + path);
  CfrTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols = Split(line, '\t');
    if (line_no == 1 && cols.size() == 4 && cols[0] == "game") {
      table.game = cols[1];
      table.iterations = std::stol(cols[3]);
      continue;
    }
    if (cols.size() != 3) {
      throw CorruptRecordError("malformed CFR table row", line_no);
    }
    CfrEntry entry;
    try {
      for (const std::string& v : Split(cols[1], ' ')) {
        entry.regret_sum.push_back(std::stod(v));
      }
      for (const std::string& v : Split(cols[2], ' ')) {
        entry.strategy_sum.push_back(std::stod(v));
      }
    } catch (const std::exception&) {
      throw CorruptRecordError("malformed CFR table number", line_no);
    }
    if (entry.regret_sum.size() != entry.strategy_sum.size()) {
      throw CorruptRecordError("regret/strategy arity mismatch", line_no);
    }
    table.entries[cols[0]] = std::move(entry);
  }
  return table;
}

namespace {

class CfrAverageBot : public Bot {
 public:
  explicit CfrAverageBot(CfrTable table) : table_(std::move(table)) {}

  std::string Name() const override {
    return "cfr_avg(" + table_.game + "," + std::to_string(table_.iterations) +
           ")";
  }

  std::vector<double> Probabilities(const GameState& state) const override {
    const std::vector<Move> legal = state.LegalMoves();
    return table_.AverageStrategy(state.StateKey(state.CurrentRole()),
                                  static_cast<int>(legal.size()));
  }

 private:
  CfrTable table_;
};

}  // namespace

std::unique_ptr<Bot> MakeCfrAverageBot(CfrTable table) {
  return std::make_unique<CfrAverageBot>(std::move(table));
}

}  // namespace strat
