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

#ifndef STRAT_PROTOCOL_STRUCTURED_OUTPUT_H_
#define STRAT_PROTOCOL_STRUCTURED_OUTPUT_H_

#include <optional>
#include <string>
#include <vector>

#include "strat/game/types.h"

namespace strat {

// One turn's generative output: free-form think text plus the bracketed
// reasoning fields and the final answer. Semantic equality compares the
// extracted fields and answer, not the raw think prose.
struct StructuredOutput {
  std::string think_text;  // full text between the think tags
  std::string state_summary;
  std::string opponent_intent;
  std::string opponent_prediction;
  std::string my_intent;
  std::string my_action;  // canonical move display string
  std::string my_prediction;
  std::string answer_text;
  int length = 0;  // whitespace-delimited word count of the raw response

  bool operator==(const StructuredOutput& other) const {
    return state_summary == other.state_summary &&
           opponent_intent == other.opponent_intent &&
           opponent_prediction == other.opponent_prediction &&
           my_intent == other.my_intent && my_action == other.my_action &&
           my_prediction == other.my_prediction &&
           answer_text == other.answer_text;
  }
};

enum class FormatErrorKind {
  kNone,
  kMalformedTags,   // think/answer envelope broken or trailing text
  kMissingFields,   // a required bracketed field is absent
};

struct ParseOutcome {
  enum class Status { kParsed, kFormatError, kInvalidAction };

  Status status = Status::kFormatError;
  FormatErrorKind error_kind = FormatErrorKind::kMalformedTags;
  std::optional<StructuredOutput> output;  // present unless tags malformed
  std::vector<std::string> missing_fields;
  std::string invalid_action_text;  // set for kInvalidAction
  int move_id = -1;                 // resolved legal move id when kParsed

  bool parsed() const { return status == Status::kParsed; }
};

// Extracts the think/answer envelope and the six bracketed fields
// ([state_summary: ...], [OpponentIntent: ...], [OpponentPrediction: ...],
// [MyIntent: ...], [MyAction: ...], [MyPrediction: ...]; first occurrence
// of each name wins), then resolves MyAction against `legal` by canonical
// string match after whitespace normalization. All failures are encoded in
// the returned ParseOutcome; this never throws.
ParseOutcome ParseStructuredOutput(const std::string& raw,
                                   const std::vector<Move>& legal);

// Canonical serialization: all bracketed fields inside the think block,
// then the answer. ParseStructuredOutput inverts it.
std::string SerializeStructuredOutput(const StructuredOutput& output);

// Fills a StructuredOutput from semantic fields, composing the think text
// and answer in the canonical layout.
StructuredOutput MakeStructuredOutput(
    const std::string& state_summary, const std::string& opponent_intent,
    const std::string& opponent_prediction, const std::string& my_intent,
    const std::string& my_action, const std::string& my_prediction);

}  // namespace strat

#endif  // STRAT_PROTOCOL_STRUCTURED_OUTPUT_H_
