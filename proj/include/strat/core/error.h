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

#ifndef STRAT_CORE_ERROR_H_
#define STRAT_CORE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strat {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define STRAT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

STRAT_DEFINE_ERROR(UnknownGameError);
STRAT_DEFINE_ERROR(IllegalMoveError);
STRAT_DEFINE_ERROR(NotTerminalError);
STRAT_DEFINE_ERROR(TerminalStateError);
STRAT_DEFINE_ERROR(UnsupportedGameError);
STRAT_DEFINE_ERROR(AlphaOutOfRangeError);
STRAT_DEFINE_ERROR(GameTooLargeError);
STRAT_DEFINE_ERROR(RoleMismatchError);
STRAT_DEFINE_ERROR(UnknownOptionError);
STRAT_DEFINE_ERROR(RemoteUnavailableError);
STRAT_DEFINE_ERROR(TimeoutError);
STRAT_DEFINE_ERROR(JudgeUnavailableError);
STRAT_DEFINE_ERROR(TurnNotOwnedByEgoError);
STRAT_DEFINE_ERROR(VersionMismatchError);
STRAT_DEFINE_ERROR(ReplayMismatchError);
STRAT_DEFINE_ERROR(ConfigError);

#undef STRAT_DEFINE_ERROR

// Store-file corruption; reports the 1-based line the parse failed on.
class CorruptRecordError : public Error {
 public:
  CorruptRecordError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace strat

#endif  // STRAT_CORE_ERROR_H_
