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

#include "strat/solvers/kuhn_nash.h"

#include <string>

#include "strat/core/error.h"

namespace strat {

namespace {

class KuhnNashBot : public Bot {
 public:
  KuhnNashBot(double alpha, PlayerRole role) : alpha_(alpha), role_(role) {}

  std::string Name() const override {
    return std::string("kuhn_nash(alpha=") + std::to_string(alpha_) + "," +
           RoleName(role_) + ")";
  }

  std::vector<double> Probabilities(const GameState& state) const override {
    const auto& kuhn = std::get<KuhnPokerState>(state.impl());
    if (state.CurrentRole() != role_) {
      throw RoleMismatchError("kuhn_nash bot asked to act out of role");
    }
    const int card = kuhn.cards[RoleIndex(role_)];
    const std::string& bets = kuhn.bets;
    double bet_or_call;  // probability on Bet (ids {Check,Bet}) or Call
    if (role_ == PlayerRole::kFirst) {
      if (bets.empty()) {
        bet_or_call = card == 0 ? alpha_ : card == 1 ? 0.0 : 3.0 * alpha_;
      } else {  // "cb": facing Second's bet
        bet_or_call =
            card == 0 ? 0.0 : card == 1 ? alpha_ + 1.0 / 3.0 : 1.0;
      }
    } else {
      if (bets == "c") {  // may bluff behind a check
        bet_or_call = card == 0 ? 1.0 / 3.0 : card == 1 ? 0.0 : 1.0;
      } else {  // "b": facing First's bet
        bet_or_call = card == 0 ? 0.0 : card == 1 ? 1.0 / 3.0 : 1.0;
      }
    }
    // Legal order is {Check, Bet} or {Call, Fold}; the aggressive/continue
    // option is Bet in the first case and Call in the second.
    std::vector<Move> legal = state.LegalMoves();
    std::vector<double> probs(2, 0.0);
    for (size_t a = 0; a < legal.size(); ++a) {
      bool continues = legal[a].display == "Bet" || legal[a].display == "Call";
      probs[a] = continues ? bet_or_call : 1.0 - bet_or_call;
    }
    return probs;
  }

 private:
  double alpha_;
  PlayerRole role_;
};

}  // namespace

std::pair<std::unique_ptr<Bot>, std::unique_ptr<Bot>> KuhnNashBotPair(
    double alpha) {
  if (alpha < 0.0 || alpha > 1.0 / 3.0) {
    throw AlphaOutOfRangeError("kuhn_nash alpha must lie in [0, 1/3]: " +
                               std::to_string(alpha));
  }
  return {std::make_unique<KuhnNashBot>(alpha, PlayerRole::kFirst),
          std::make_unique<KuhnNashBot>(alpha, PlayerRole::kSecond)};
}

}  // namespace strat
