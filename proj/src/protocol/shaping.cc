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

#include "strat/protocol/shaping.h"

#include <algorithm>

namespace strat {

ShapedReward ShapingReward(const ParseOutcome& outcome,
                           const ShapingConfig& cfg) {
  switch (outcome.status) {
    case ParseOutcome::Status::kParsed:
      return {cfg.format_bonus, false};
    case ParseOutcome::Status::kInvalidAction:
      return {cfg.invalid_penalty, cfg.terminate_on_invalid};
    case ParseOutcome::Status::kFormatError:
      return {cfg.format_error_penalty, cfg.terminate_on_invalid};
  }
  return {0.0, false};
}

double LengthPenalty(int length, const ShapingConfig& cfg) {
  double span = static_cast<double>(cfg.length_max - cfg.length_min);
  double inner = 1.0 - (static_cast<double>(length) - cfg.length_min) / span;
  return cfg.length_alpha * std::min(0.0, inner);
}

}  // namespace strat
