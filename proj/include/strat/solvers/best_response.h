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

#ifndef STRAT_SOLVERS_BEST_RESPONSE_H_
#define STRAT_SOLVERS_BEST_RESPONSE_H_

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

#include "strat/game/game.h"
#include "strat/solvers/bots.h"

namespace strat {

struct BestResponseResult {
  // Expected value for the responder under (best response, opponent).
  double value = 0.0;
  // Argmax move id per responder information state.
  std::unordered_map<std::string, int> policy;
};

// Exact best response for `role` against `opponent`'s behavioral strategy by
// full tree traversal with opponent reach probabilities. Supported games:
// kuhn_poker, leduc_holdem, tic_tac_toe. Throws GameTooLargeError otherwise.
BestResponseResult BestResponse(const std::string& game, const Bot& opponent,
                                PlayerRole role);

// Bot playing a computed best-response policy.
std::unique_ptr<Bot> MakeBestResponseBot(BestResponseResult result,
                                         std::string name);

struct ExploitabilityReport {
  double best_response_first = 0.0;   // BR value for First vs second's policy
  double best_response_second = 0.0;  // BR value for Second vs first's policy
  double exploitability = 0.0;        // average of the best-response gains
  long iterations = 0;                // CFR iterations behind the profile
};

// For a zero-sum profile: (BR_first + BR_second) / 2; zero exactly at a Nash
// equilibrium, non-negative up to numerical tolerance.
ExploitabilityReport Exploitability(const std::string& game, const Bot& first,
                                    const Bot& second);

}  // namespace strat

#endif  // STRAT_SOLVERS_BEST_RESPONSE_H_
