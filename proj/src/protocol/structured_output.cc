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

#include "strat/protocol/structured_output.h"

#include <array>
#include <cctype>

#include "strat/core/strings.h"

namespace strat {

namespace {

constexpr std::array<const char*, 6> kFieldNames = {
    "state_summary", "OpponentIntent", "OpponentPrediction",
    "MyIntent",      "MyAction",       "MyPrediction"};

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool AllWhitespace(std::string_view s) {
  for (char c : s) {
    if (!IsSpace(c)) return false;
  }
  return true;
}

// First occurrence of "[<name> :" wins; the value runs to the next ']'.
std::optional<std::string> ExtractField(std::string_view think,
                                        std::string_view name) {
  size_t pos = 0;
  while ((pos = think.find('[', pos)) != std::string_view::npos) {
    size_t p = pos + 1;
    if (think.substr(p, name.size()) != name) {
      ++pos;
      continue;
    }
    p += name.size();
    while (p < think.size() && IsSpace(think[p])) ++p;
    if (p >= think.size() || think[p] != ':') {
      ++pos;
      continue;
    }
    ++p;
    size_t close = think.find(']', p);
    if (close == std::string_view::npos) return std::nullopt;
    return Trim(think.substr(p, close - p));
  }
  return std::nullopt;
}

}  // namespace

ParseOutcome ParseStructuredOutput(const std::string& raw,
                                   const std::vector<Move>& legal) {
  ParseOutcome outcome;
  outcome.status = ParseOutcome::Status::kFormatError;
  outcome.error_kind = FormatErrorKind::kMalformedTags;

  const std::string_view text(raw);
  size_t think_open = text.find("<think>");
  if (think_open == std::string_view::npos ||
      !AllWhitespace(text.substr(0, think_open))) {
    return outcome;
  }
  size_t think_close = text.find("</think>", think_open + 7);
  if (think_close == std::string_view::npos) return outcome;
  size_t answer_open = text.find("<answer>", think_close + 8);
  if (answer_open == std::string_view::npos ||
      !AllWhitespace(text.substr(think_close + 8,
                                 answer_open - (think_close + 8)))) {
    return outcome;
  }
  size_t answer_close = text.find("</answer>", answer_open + 8);
  if (answer_close == std::string_view::npos ||
      !AllWhitespace(text.substr(answer_close + 9))) {
    return outcome;
  }

  StructuredOutput output;
  output.think_text =
      std::string(text.substr(think_open + 7, think_close - (think_open + 7)));
  output.answer_text = std::string(
      text.substr(answer_open + 8, answer_close - (answer_open + 8)));
  output.length = WordCount(raw);

  std::array<std::string*, 6> slots = {
      &output.state_summary, &output.opponent_intent,
      &output.opponent_prediction, &output.my_intent, &output.my_action,
      &output.my_prediction};
  for (size_t i = 0; i < kFieldNames.size(); ++i) {
    std::optional<std::string> value =
        ExtractField(output.think_text, kFieldNames[i]);
    if (value.has_value()) {
      *slots[i] = *value;
    } else {
      outcome.missing_fields.emplace_back(kFieldNames[i]);
    }
  }
  outcome.output = output;
  if (!outcome.missing_fields.empty()) {
    outcome.error_kind = FormatErrorKind::kMissingFields;
    return outcome;
  }

  const std::string wanted = CollapseWhitespace(output.my_action);
  for (const Move& m : legal) {
    if (CollapseWhitespace(m.display) == wanted) {
      outcome.status = ParseOutcome::Status::kParsed;
      outcome.error_kind = FormatErrorKind::kNone;
      outcome.move_id = m.id;
      return outcome;
    }
  }
  outcome.status = ParseOutcome::Status::kInvalidAction;
  outcome.error_kind = FormatErrorKind::kNone;
  outcome.invalid_action_text = output.my_action;
  return outcome;
}

std::string SerializeStructuredOutput(const StructuredOutput& output) {
  std::string out = "<think>";
  out += output.think_text;
  out += "</think><answer>";
  out += output.answer_text;
  out += "</answer>";
  return out;
}

StructuredOutput MakeStructuredOutput(
    const std::string& state_summary, const std::string& opponent_intent,
    const std::string& opponent_prediction, const std::string& my_intent,
    const std::string& my_action, const std::string& my_prediction) {
  StructuredOutput output;
  output.state_summary = state_summary;
  output.opponent_intent = opponent_intent;
  output.opponent_prediction = opponent_prediction;
  output.my_intent = my_intent;
  output.my_action = my_action;
  output.my_prediction = my_prediction;
  output.answer_text = my_action;

  std::string think = "[state_summary: " + state_summary + "]\n";
  think += "1. Because of the current position, I believe the opponent's "
           "intent is [OpponentIntent: " +
           opponent_intent + "].\n";
  think += "2. Because of the visible threats, I believe the opponent "
           "predicts my action will be [OpponentPrediction: " +
           opponent_prediction + "].\n";
  think += "3. Because of my plan, My current intent is [MyIntent: " +
           my_intent + "], my chosen action is [MyAction: " + my_action +
           "], and I predict the opponent's next action will be "
           "[MyPrediction: " +
           my_prediction + "].";
  output.think_text = think;
  output.length = WordCount(SerializeStructuredOutput(output));
  return output;
}

}  // namespace strat
