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

#ifndef STRAT_SOLVERS_KUHN_NASH_H_
#define STRAT_SOLVERS_KUHN_NASH_H_

#include <memory>
#include <utility>

#include "strat/solvers/bots.h"

namespace strat {

// The one-parameter analytic Kuhn equilibrium family, alpha in [0, 1/3]:
//   First:  bet J w.p. alpha, never bet Q, bet K w.p. 3*alpha; after
//           check-bet call with Q w.p. alpha + 1/3, always with K, never J.
//   Second: facing a bet call K always, Q w.p. 1/3, fold J; facing a check
//           bet K always, J w.p. 1/3, check Q.
// Game value to First is -1/18 for every alpha; certified by the
// best-response oracle rather than assumed. Throws AlphaOutOfRangeError.
std::pair<std::unique_ptr<Bot>, std::unique_ptr<Bot>> KuhnNashBotPair(
    double alpha);

}  // namespace strat

#endif  // STRAT_SOLVERS_KUHN_NASH_H_
