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

#include "search_pursuit/game_file.h"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace search_pursuit {
namespace {

using Json = nlohmann::ordered_json;

// SAX consumer that builds a DOM but stores numbers as their source text.
class ExactNumberBuilder {
 public:
  explicit ExactNumberBuilder(Json& root) : root_(root) {}

  bool null() { return Put(Json(nullptr)); }
  bool boolean(bool v) { return Put(Json(v)); }
  bool number_integer(Json::number_integer_t v) { return Put(Json(std::to_string(v))); }
  bool number_unsigned(Json::number_unsigned_t v) { return Put(Json(std::to_string(v))); }
  bool number_float(Json::number_float_t, const Json::string_t& s) { return Put(Json(s)); }
  bool string(Json::string_t& s) { return Put(Json(s)); }
  bool binary(Json::binary_t&) { return false; }

  bool start_object(std::size_t) {
    Json* obj = Put(Json::object()) ? last_ : nullptr;
    stack_.push_back(obj);
    return true;
  }
  bool key(Json::string_t& k) {
    if (stack_.back()->contains(k)) {
      duplicate_key_ = k;
      return false;
    }
    pending_key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    Json* arr = Put(Json::array()) ? last_ : nullptr;
    stack_.push_back(arr);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    error_position_ = position;
    error_message_ = ex.what();
    return false;
  }

  std::optional<std::size_t> error_position_;
  std::string error_message_;
  std::string duplicate_key_;

 private:
  bool Put(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      last_ = &root_;
    } else if (stack_.back()->is_array()) {
      stack_.back()->push_back(std::move(value));
      last_ = &stack_.back()->back();
    } else {
      last_ = &((*stack_.back())[pending_key_] = std::move(value));
    }
    return true;
  }

  Json& root_;
  std::vector<Json*> stack_;
  Json* last_ = nullptr;
  std::string pending_key_;
};

std::string LineColumn(std::string_view text, std::size_t position) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < position && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void RejectUnknown(const Json& obj, const std::string& path,
                   const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw GameFileError(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw GameFileError(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

const Json& Required(const Json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) {
    throw GameFileError(path.empty() ? key : path + "." + key, "missing field");
  }
  return obj.at(key);
}

std::string Child(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

int IntegerField(const Json& value, const std::string& path) {
  Rational q = RationalField(value, path);
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) {
    throw GameFileError(path, "expected an integer, got " + ToString(q));
  }
  return static_cast<int>(q.get_num().get_si());
}

GameSpec ParseLocations(const Json& root) {
  const Json& locations = Required(root, "", "locations");
  if (!locations.is_array() || locations.empty()) {
    throw GameFileError("locations", "expected a nonempty array");
  }
  GameSpec spec;
  for (std::size_t i = 0; i < locations.size(); ++i) {
    const std::string path = "locations[" + std::to_string(i) + "]";
    const Json& loc = locations[i];
    RejectUnknown(loc, path, {"time", "capture"});
    Rational t = RationalField(Required(loc, path, "time"), path + ".time");
    Rational p = RationalField(Required(loc, path, "capture"), path + ".capture");
    if (sgn(t) <= 0) throw GameFileError(path + ".time", "search time must be positive");
    if (sgn(p) <= 0 || p > 1) {
      throw GameFileError(path + ".capture", "capture probability must be in (0,1]");
    }
    spec.times.push_back(std::move(t));
    spec.capture.push_back(std::move(p));
  }
  spec.budget = RationalField(Required(root, "", "budget"), "budget");
  if (sgn(spec.budget) < 0) throw GameFileError("budget", "must be nonnegative");
  return spec;
}

TwoTypeSpec ParseTwoType(const Json& block) {
  const std::string path = "two_type";
  RejectUnknown(block, path, {"a", "b", "tau", "p", "q", "k"});
  TwoTypeSpec spec;
  spec.a = IntegerField(Required(block, path, "a"), Child(path, "a"));
  spec.b = IntegerField(Required(block, path, "b"), Child(path, "b"));
  spec.tau = IntegerField(Required(block, path, "tau"), Child(path, "tau"));
  spec.p = RationalField(Required(block, path, "p"), Child(path, "p"));
  spec.q = RationalField(Required(block, path, "q"), Child(path, "q"));
  spec.k = IntegerField(Required(block, path, "k"), Child(path, "k"));
  try {
    spec.Validate();
  } catch (const std::invalid_argument& e) {
    throw GameFileError(path, e.what());
  }
  return spec;
}

LearningSpec ParseLearning(const Json& block) {
  const std::string path = "learning";
  RejectUnknown(block, path, {"low", "high"});
  LearningSpec spec;
  spec.low = RationalField(Required(block, path, "low"), Child(path, "low"));
  spec.high = RationalField(Required(block, path, "high"), Child(path, "high"));
  try {
    spec.Validate();
  } catch (const std::invalid_argument& e) {
    throw GameFileError(path, e.what());
  }
  return spec;
}

}  // namespace

std::string_view ModeName(GameMode mode) {
  switch (mode) {
    case GameMode::kGeneral: return "general";
    case GameMode::kConstantTimes: return "constant-times";
    case GameMode::kArithmeticTimes: return "arithmetic-times";
    case GameMode::kTwoType: return "two-type";
    case GameMode::kLearning: return "learning";
  }
  return "general";
}

GameMode ParseMode(std::string_view name) {
  for (GameMode m : {GameMode::kGeneral, GameMode::kConstantTimes,
                     GameMode::kArithmeticTimes, GameMode::kTwoType,
                     GameMode::kLearning}) {
    if (ModeName(m) == name) return m;
  }
  throw GameFileError("mode", "unknown mode '" + std::string(name) + "'");
}

GameSpec GameFile::GeneralGame() const {
  if (game) return *game;
  if (two_type) return ExpandTwoType(*two_type);
  throw GameFileError("locations", "no locations given and no two_type block to expand");
}

Json ParseExactJson(std::string_view text) {
  Json root;
  ExactNumberBuilder builder(root);
  const bool ok = Json::sax_parse(text.begin(), text.end(), &builder);
  if (!ok) {
    if (!builder.duplicate_key_.empty()) {
      throw GameFileError(builder.duplicate_key_, "duplicate field");
    }
    const std::size_t pos = builder.error_position_.value_or(0);
    throw GameFileError(LineColumn(text, pos), "malformed JSON: " + builder.error_message_);
  }
  return root;
}

Rational RationalField(const Json& value, const std::string& path) {
  if (!value.is_string()) {
    throw GameFileError(path, "expected a number or a \"num/den\" string");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw GameFileError(path, e.what());
  }
}

GameFile ParseGameFile(std::string_view text) {
  const Json root = ParseExactJson(text);
  RejectUnknown(root, "", {"mode", "locations", "budget", "two_type", "learning"});

  GameFile file;
  if (root.contains("mode")) {
    if (!root["mode"].is_string()) throw GameFileError("mode", "expected a string");
    file.mode = ParseMode(root["mode"].get<std::string>());
  }
  if (root.contains("locations")) {
    file.game = ParseLocations(root);
  } else if (root.contains("budget")) {
    throw GameFileError("budget", "budget given without locations");
  }
  if (root.contains("two_type")) file.two_type = ParseTwoType(root["two_type"]);
  if (root.contains("learning")) file.learning = ParseLearning(root["learning"]);

  switch (file.mode) {
    case GameMode::kTwoType:
      if (!file.two_type) throw GameFileError("two_type", "required by mode two-type");
      break;
    case GameMode::kLearning:
      if (!file.learning) throw GameFileError("learning", "required by mode learning");
      break;
    default:
      if (!file.game && !file.two_type) {
        throw GameFileError("locations", "missing field");
      }
  }
  return file;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameFileError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GameFile LoadGameFile(const std::string& path) {
  return ParseGameFile(ReadTextFile(path));
}

}  // namespace search_pursuit
