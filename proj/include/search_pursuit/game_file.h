// Copyright 2026 The Search Pursuit Authors
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

#ifndef SEARCH_PURSUIT_GAME_FILE_H_
#define SEARCH_PURSUIT_GAME_FILE_H_

// JSON game files. Numbers are read from their source text, so 0.15 is
// exactly 3/20; "num/den" strings are accepted wherever a number is.
//
//   {
//     "mode": "general",              // optional
//     "locations": [{"time": 5, "capture": ".1"}, ...],
//     "budget": 7,
//     "two_type": {"a": 4, "b": 2, "tau": 2, "p": "3/10", "q": "1/5", "k": 4},
//     "learning": {"low": "1/3", "high": "2/3"}
//   }

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "search_pursuit/closed_forms.h"
#include "search_pursuit/game.h"
#include "search_pursuit/learning.h"

namespace search_pursuit {

enum class GameMode { kGeneral, kConstantTimes, kArithmeticTimes, kTwoType, kLearning };

std::string_view ModeName(GameMode mode);
// Throws GameFileError on an unknown name.
GameMode ParseMode(std::string_view name);

// Malformed or invalid input. `where` is "line L, column C" for syntax errors
// and a field path such as "locations[2].capture" otherwise.
class GameFileError : public std::invalid_argument {
 public:
  GameFileError(std::string where, const std::string& message)
      : std::invalid_argument(where.empty() ? message : where + ": " + message),
        where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct GameFile {
  GameMode mode = GameMode::kGeneral;
  std::optional<GameSpec> game;
  std::optional<TwoTypeSpec> two_type;
  std::optional<LearningSpec> learning;

  // The explicit locations, or the expansion of the two-type block.
  GameSpec GeneralGame() const;
};

// Parses JSON, keeping every number as its literal text (a JSON string).
nlohmann::ordered_json ParseExactJson(std::string_view text);

// Reads a JSON value that must be a number or a rational string.
Rational RationalField(const nlohmann::ordered_json& value, const std::string& path);

GameFile ParseGameFile(std::string_view text);
GameFile LoadGameFile(const std::string& path);
std::string ReadTextFile(const std::string& path);

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_GAME_FILE_H_
