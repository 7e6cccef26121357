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

#include "strat/protocol/prompts.h"

#include "strat/protocol/prompt_assets.h"

namespace strat {

std::string RenderAgentPrompt(const std::string& observation) {
  std::string_view tmpl = Asset_structured_reasoning();
  if (observation.empty()) return std::string(tmpl);
  std::string out = observation;
  out += "\n";
  out += tmpl;
  return out;
}

}  // namespace strat
