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

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "strat/core/strings.h"
#include "strat/game/game.h"
#include "strat/protocol/prompt_assets.h"
#include "strat/protocol/prompts.h"
#include "strat/protocol/shaping.h"
#include "strat/protocol/structured_output.h"

namespace strat {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string FixturePath(const std::string& name) {
  return std::string(STRAT_TEST_FIXTURE_DIR) + "/" + name;
}

std::string AssetPath(const std::string& name) {
  return std::string(STRAT_ASSET_DIR) + "/" + name;
}

TEST_CASE("case-study response parses to the quoted field values") {
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  std::string raw = ReadFile(FixturePath("case_study_response.txt"));
  ParseOutcome outcome = ParseStructuredOutput(raw, board.LegalMoves());
  REQUIRE(outcome.parsed());
  const StructuredOutput& out = *outcome.output;
  CHECK(out.state_summary ==
        "X has two in a row on the middle row, opponent has two in the top "
        "row corners.");
  CHECK(out.opponent_intent == "To complete a row or diagonal");
  CHECK(out.opponent_prediction ==
        "Placing X in (1,2) to finish the middle row");
  CHECK(out.my_intent == "Finish the middle row");
  CHECK(out.my_action == "X(1,2)");
  CHECK(out.my_prediction == "Blocking by placing O in (1,2)");
  CHECK(out.answer_text == "X(1,2)");
  CHECK(outcome.move_id == 5);
}

TEST_CASE("missing think tag is a malformed-tags format error") {
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  ParseOutcome outcome =
      ParseStructuredOutput("<think>no closing tag", board.LegalMoves());
  CHECK(outcome.status == ParseOutcome::Status::kFormatError);
  CHECK(outcome.error_kind == FormatErrorKind::kMalformedTags);

  ParseOutcome trailing = ParseStructuredOutput(
      "<think>t [state_summary: s][OpponentIntent: a][OpponentPrediction: "
      "b][MyIntent: c][MyAction: X(1,2)][MyPrediction: d]</think>"
      "<answer>X(1,2)</answer>junk",
      board.LegalMoves());
  CHECK(trailing.status == ParseOutcome::Status::kFormatError);
  CHECK(trailing.error_kind == FormatErrorKind::kMalformedTags);
}

TEST_CASE("out-of-range action is an invalid action, not a format error") {
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  ParseOutcome outcome = ParseStructuredOutput(
      "<think>[state_summary: s][OpponentIntent: a][OpponentPrediction: b]"
      "[MyIntent: c][MyAction: X(3,3)][MyPrediction: d]</think>"
      "<answer>X(3,3)</answer>",
      board.LegalMoves());
  CHECK(outcome.status == ParseOutcome::Status::kInvalidAction);
  CHECK(outcome.invalid_action_text == "X(3,3)");
}

TEST_CASE("absent fields are reported") {
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  ParseOutcome outcome = ParseStructuredOutput(
      "<think>[state_summary: s][MyAction: X(1,2)]</think>"
      "<answer>X(1,2)</answer>",
      board.LegalMoves());
  CHECK(outcome.status == ParseOutcome::Status::kFormatError);
  CHECK(outcome.error_kind == FormatErrorKind::kMissingFields);
  CHECK(outcome.missing_fields ==
        std::vector<std::string>({"OpponentIntent", "OpponentPrediction",
                                  "MyIntent", "MyPrediction"}));
}

TEST_CASE("first occurrence of a duplicated field wins") {
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  ParseOutcome outcome = ParseStructuredOutput(
      "<think>[state_summary: s][OpponentIntent: first][OpponentIntent: "
      "second][OpponentPrediction: b][MyIntent: c][MyAction:   X(1,2)  ]"
      "[MyPrediction: d]</think><answer>X(1,2)</answer>",
      board.LegalMoves());
  REQUIRE(outcome.parsed());
  CHECK(outcome.output->opponent_intent == "first");
  CHECK(outcome.output->my_action == "X(1,2)");  // value whitespace trimmed
}

TEST_CASE("round-trip holds for 1000 random well-formed outputs") {
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  std::vector<Move> legal = board.LegalMoves();
  std::mt19937_64 rng(2024);
  // Random field texts avoid ']' (which would close the field early) and
  // '[' (which could shadow a later field name); both are excluded by
  // construction in well-formed outputs.
  const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 "
      ".,:;()'-";
  auto random_text = [&]() {
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
    return Trim(CollapseWhitespace(s));
  };
  std::uniform_int_distribution<size_t> pick_move(0, legal.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    std::string action = legal[pick_move(rng)].display;
    StructuredOutput original = MakeStructuredOutput(
        random_text(), random_text(), random_text(), random_text(), action,
        random_text());
    std::string raw = SerializeStructuredOutput(original);
    ParseOutcome outcome = ParseStructuredOutput(raw, legal);
    REQUIRE(outcome.parsed());
    CHECK(*outcome.output == original);
  }
}

TEST_CASE("shaping rewards") {
  ShapingConfig cfg;
  ParseOutcome parsed;
  parsed.status = ParseOutcome::Status::kParsed;
  CHECK(ShapingReward(parsed, cfg).reward == 0.05);
  CHECK(!ShapingReward(parsed, cfg).terminate);

  ParseOutcome invalid;
  invalid.status = ParseOutcome::Status::kInvalidAction;
  CHECK(ShapingReward(invalid, cfg).reward == -10.0);
  CHECK(ShapingReward(invalid, cfg).terminate);

  ParseOutcome malformed;
  malformed.status = ParseOutcome::Status::kFormatError;
  CHECK(ShapingReward(malformed, cfg).reward == -10.0);
  CHECK(ShapingReward(malformed, cfg).terminate);
}

TEST_CASE("length penalty formula") {
  ShapingConfig cfg;
  CHECK(LengthPenalty(11, cfg) == 0.0);
  CHECK(LengthPenalty(2048, cfg) == 0.0);
  CHECK(LengthPenalty(4085, cfg) == -0.5);
  CHECK(LengthPenalty(0, cfg) == 0.0);
  // Monotone non-increasing, zero exactly on [0, l_max].
  double prev = 1.0;
  for (int l = 0; l <= 5000; l += 7) {
    double p = LengthPenalty(l, cfg);
    CHECK(p <= prev + 1e-15);
    if (l <= 2048) CHECK(p == 0.0);
    if (l > 2048) CHECK(p < 0.0);
    prev = p;
  }
}

TEST_CASE("shaped turn total for a winning valid concise move") {
  // env +1, format +0.05, length 0.
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  std::string raw = ReadFile(FixturePath("case_study_response.txt"));
  ParseOutcome outcome = ParseStructuredOutput(raw, board.LegalMoves());
  REQUIRE(outcome.parsed());
  ShapingConfig cfg;
  auto [next, step] = ApplyMove(
      board, Move{outcome.move_id, outcome.output->my_action});
  double total = step.rewards[0] + ShapingReward(outcome, cfg).reward +
                 LengthPenalty(outcome.output->length, cfg);
  CHECK(total == 1.05);
}

TEST_CASE("agent prompt ends with the instruction template") {
  std::string obs = "Some observation.\n";
  std::string prompt = RenderAgentPrompt(obs);
  std::string tmpl(Asset_structured_reasoning());
  CHECK(EndsWith(prompt, tmpl));
  CHECK(StartsWith(prompt, obs));
  CHECK(RenderAgentPrompt("") == tmpl);
  CHECK(RenderAgentPrompt(obs) == RenderAgentPrompt(obs));
}

TEST_CASE("embedded templates match the checked-in assets byte for byte") {
  CHECK(std::string(Asset_structured_reasoning()) ==
        ReadFile(AssetPath("structured_reasoning.txt")));
  CHECK(std::string(Asset_judge_tic_tac_toe()) ==
        ReadFile(AssetPath("judge_tic_tac_toe.txt")));
  CHECK(std::string(Asset_judge_kuhn_poker()) ==
        ReadFile(AssetPath("judge_kuhn_poker.txt")));
  CHECK(std::string(Asset_judge_hanabi()) ==
        ReadFile(AssetPath("judge_hanabi.txt")));
}

TEST_CASE("parsing is pure text work") {
  // Same raw text and legal list always produce the same outcome.
  GameState board = NewTicTacToeFromBoard("O.OXX....");
  std::string raw = ReadFile(FixturePath("case_study_response.txt"));
  ParseOutcome a = ParseStructuredOutput(raw, board.LegalMoves());
  ParseOutcome b = ParseStructuredOutput(raw, board.LegalMoves());
  CHECK(a.parsed() == b.parsed());
  CHECK(*a.output == *b.output);
}

}  // namespace
}  // namespace strat
