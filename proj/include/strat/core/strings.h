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

#ifndef STRAT_CORE_STRINGS_H_
#define STRAT_CORE_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace strat {

std::string Trim(std::string_view s);

// Collapses every run of whitespace to a single space and trims the ends.
// This is the canonical normalization used for action and label matching.
std::string CollapseWhitespace(std::string_view s);

std::vector<std::string> Split(std::string_view s, char sep);

std::string Join(const std::vector<std::string>& parts,
                 std::string_view sep);

bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// Whitespace-delimited word count; the token-count surrogate used by the
// length penalty.
int WordCount(std::string_view s);

// Replaces every occurrence of `from` with `to`.
std::string ReplaceAll(std::string s, std::string_view from,
                       std::string_view to);

}  // namespace strat

#endif  // STRAT_CORE_STRINGS_H_
