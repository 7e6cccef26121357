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

#ifndef STRAT_SOLVERS_CFR_H_
#define STRAT_SOLVERS_CFR_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "strat/game/game.h"
#include "strat/solvers/bots.h"

namespace strat {

struct CfrEntry {
  std::vector<double> regret_sum;
  std::vector<double> strategy_sum;
};

// Cumulative regrets and strategy weights per information state.
struct CfrTable {
  std::string game;
  long iterations = 0;
  std::unordered_map<std::string, CfrEntry> entries;

  // Normalized strategy sums; uniform at unvisited information states or
  // when no weight has accumulated.
  std::vector<double> AverageStrategy(const std::string& key,
                                      int n_actions) const;

  // Line-delimited text: key, regrets, strategy sums, tab-separated.
  void Save(const std::string& path) const;
  static CfrTable Load(const std::string& path);
};

struct CfrConfig {
  // Exhaustive chance enumerates every deal each iteration (exact CFR);
  // otherwise one deal is sampled per iteration (chance-sampling CFR).
  bool sample_chance = false;
  uint64_t seed = 0;
  // Invoked as callback(iteration, table) at power-of-ten checkpoints when
  // set; used for convergence logging.
  std::function<void(long, const CfrTable&)> checkpoint;
};

// Defaults per game: exhaustive chance for kuhn_poker, chance sampling for
// leduc_holdem.
CfrConfig DefaultCfrConfig(const std::string& game);

// Vanilla regret-matching CFR. Supported games: kuhn_poker, leduc_holdem.
// Throws UnsupportedGameError otherwise.
CfrTable CfrTrain(const std::string& game, long iterations,
                  const CfrConfig& config);
CfrTable CfrTrain(const std::string& game, long iterations);

// Bot playing the average strategy of a trained table (either role).
std::unique_ptr<Bot> MakeCfrAverageBot(CfrTable table);

}  // namespace strat

#endif  // STRAT_SOLVERS_CFR_H_
