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

#ifndef STRAT_PROTOCOL_PROMPTS_H_
#define STRAT_PROTOCOL_PROMPTS_H_

#include <string>

namespace strat {

// Game observation followed by the structured-reasoning instruction block,
// byte-identical to the checked-in template. An empty observation yields
// just the template.
std::string RenderAgentPrompt(const std::string& observation);

}  // namespace strat

#endif  // STRAT_PROTOCOL_PROMPTS_H_
