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

#ifndef STRAT_PROTOCOL_PROMPT_ASSETS_H_
#define STRAT_PROTOCOL_PROMPT_ASSETS_H_

#include <string_view>

namespace strat {

// Byte-for-byte contents of the checked-in assets/prompts/*.txt files,
// embedded at build time.
std::string_view Asset_structured_reasoning();
std::string_view Asset_judge_tic_tac_toe();
std::string_view Asset_judge_kuhn_poker();
std::string_view Asset_judge_hanabi();

}  // namespace strat

#endif  // STRAT_PROTOCOL_PROMPT_ASSETS_H_
