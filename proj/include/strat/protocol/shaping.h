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

#ifndef STRAT_PROTOCOL_SHAPING_H_
#define STRAT_PROTOCOL_SHAPING_H_

#include <utility>

#include "strat/protocol/structured_output.h"

namespace strat {

struct ShapingConfig {
  double format_bonus = 0.05;
  double invalid_penalty = -10.0;
  // Malformed responses forfeit the game like invalid actions; the split is
  // configurable.
  double format_error_penalty = -10.0;
  bool terminate_on_invalid = true;
  double length_alpha = 0.5;
  int length_min = 11;
  int length_max = 2048;
};

struct ShapedReward {
  double reward = 0.0;
  bool terminate = false;
};

// Parsed -> (+format_bonus, false); InvalidAction/FormatError ->
// (penalty, terminate_on_invalid).
ShapedReward ShapingReward(const ParseOutcome& outcome,
                           const ShapingConfig& cfg);

// alpha * min(0, 1 - (l - l_min) / (l_max - l_min)): zero up to l_max,
// linearly negative beyond.
double LengthPenalty(int length, const ShapingConfig& cfg);

}  // namespace strat

#endif  // STRAT_PROTOCOL_SHAPING_H_
