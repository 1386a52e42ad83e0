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

#include "search_pursuit/cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "search_pursuit/closed_forms.h"
#include "search_pursuit/game_file.h"
#include "search_pursuit/learning.h"
#include "search_pursuit/lp_solver.h"
#include "search_pursuit/oracle.h"

namespace search_pursuit {
namespace {

using Json = nlohmann::ordered_json;

// Raised for results that fail their own consistency checks.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string solution_file;
  std::string output;
  std::string format = "table";
  std::string mode;
  std::string low;
  std::string high;
  bool time_labels = false;
  bool timing = false;
  std::size_t max_subsets = EnumerationOptions{}.max_subsets;
  int k_from = 0;
  int k_to = 0;

  EnumerationOptions enumeration() const { return {max_subsets}; }
};

// The solved game as reported by `solve`.
struct Report {
  GameMode mode = GameMode::kGeneral;
  GameSpec spec;
  PayoffMatrix matrix;
  Rational value;
  std::vector<Rational> hider;
  std::vector<WeightedSet> searcher;
  std::string provenance;
  Certificate certificate;
  Json closed_form;
};

Json ValueJson(const Rational& q) {
  return Json{{"fraction", ToString(q)}, {"decimal", ToDecimal(q)}};
}

Json RationalArray(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& q : values) out.push_back(ToString(q));
  return out;
}

std::string SetLabel(const SearchSet& set, const GameSpec& spec, bool time_labels) {
  return time_labels ? set.ToTimeLabel(spec) : set.ToString();
}

std::vector<WeightedSet> PositiveRows(const PayoffMatrix& matrix,
                                      const std::vector<Rational>& rows) {
  std::vector<WeightedSet> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (sgn(rows[r]) > 0) out.push_back({matrix.rows[r], rows[r]});
  }
  return out;
}

void Certify(Report& report) {
  report.certificate =
      VerifyEquilibrium(report.matrix.entries, report.hider,
                        RowDistribution(report.matrix, report.searcher), report.value);
  if (!report.certificate.ok) {
    throw VerificationError("computed solution failed its equilibrium certificate");
  }
}

void RequireSameValue(const Rational& closed_form, const Rational& lp) {
  if (closed_form != lp) {
    throw VerificationError("closed form value " + ToString(closed_form) +
                            " differs from LP value " + ToString(lp));
  }
}

Report SolveGeneralMode(const GameSpec& spec, const Options& options) {
  Report report;
  report.spec = spec;
  GameSolution solved = SolveGame(spec, options.enumeration());
  report.matrix = std::move(solved.matrix);
  report.value = solved.solution.value;
  report.hider = solved.solution.col_strategy;
  report.searcher = PositiveRows(report.matrix, solved.solution.row_strategy);
  report.provenance = "lp";
  // Nothing fits in the budget: every hiding distribution is optimal.
  if (report.matrix.rows.size() == 1 && report.matrix.rows.front().empty()) {
    const auto n = static_cast<long>(spec.num_locations());
    report.hider.assign(spec.capture.size(), MakeRational(1, n));
  }
  Certify(report);
  return report;
}

Report SolveConstantTimesMode(const GameSpec& spec, const Options& options) {
  for (const Rational& t : spec.times) {
    if (t != spec.times.front()) {
      throw GameFileError("locations", "constant-times mode needs equal search times");
    }
  }
  const Rational slots = spec.budget / spec.times.front();
  const mpz_class k = slots.get_num() / slots.get_den();
  if (!k.fits_sint_p()) throw GameFileError("budget", "budget too large");
  const ConstantTimeSolution closed = SolveConstantTimes(spec.capture, static_cast<int>(k.get_si()));

  Report report = SolveGeneralMode(spec, options);
  RequireSameValue(closed.value, report.value);
  report.mode = GameMode::kConstantTimes;
  report.hider = closed.hider;
  report.provenance = "both";
  report.closed_form = Json{
      {"lambda_sum", ToString(closed.lambda_sum)},
      {"regime", closed.regime == ConstantTimeRegime::kInterior ? "interior" : "corner"},
      {"value", ToString(closed.value)}};
  Certify(report);
  return report;
}

Report SolveArithmeticMode(const GameSpec& spec, const Options& options) {
  const int n = spec.num_locations();
  for (int i = 1; i <= n; ++i) {
    if (spec.time(i) != i) {
      throw GameFileError("locations[" + std::to_string(i - 1) + "].time",
                          "arithmetic-times mode needs t_i = i");
    }
  }
  if (spec.budget != n) {
    throw GameFileError("budget", "arithmetic-times mode needs budget = n");
  }
  const ArithmeticTimesSolution closed = SolveArithmeticTimes(spec.capture, options.enumeration());
  Report report = SolveGeneralMode(spec, options);
  RequireSameValue(closed.value, report.value);
  report.mode = GameMode::kArithmeticTimes;
  report.hider = closed.hider;
  report.searcher = closed.searcher;
  report.provenance = "both";
  report.closed_form = Json{{"m", closed.m},
                            {"even", closed.even},
                            {"strictly_decreasing", closed.strictly_decreasing},
                            {"s_sum", ToString(closed.s_sum)},
                            {"verified", closed.verified}};
  Certify(report);
  return report;
}

Report SolveTwoTypeMode(const TwoTypeSpec& spec, const Options& options) {
  const TwoTypeSolution closed = SolveTwoType(spec);
  Report report = SolveGeneralMode(ExpandTwoType(spec), options);
  RequireSameValue(closed.value, report.value);
  report.mode = GameMode::kTwoType;
  report.hider = ExpandTwoTypeHider(spec, closed);
  report.searcher = ExpandTwoTypeSearcher(spec, closed, options.enumeration());
  report.provenance = "both";
  report.closed_form = Json{{"y_bar", ToString(closed.y_bar)},
                            {"j_hat", ToString(closed.j_hat)},
                            {"m", closed.m},
                            {"value", ToString(closed.value)},
                            {"searcher_mix", RationalArray(closed.searcher_mix)}};
  Certify(report);
  return report;
}

Json CertificateJson(const Report& report, bool time_labels) {
  Json cert{{"ok", report.certificate.ok}};
  if (auto row = report.certificate.WorstRow()) {
    cert["worst_row"] = SetLabel(report.matrix.rows[*row], report.spec, time_labels);
  } else {
    cert["worst_row"] = nullptr;
  }
  if (auto col = report.certificate.WorstColumn()) {
    cert["worst_column"] = *col + 1;
  } else {
    cert["worst_column"] = nullptr;
  }
  return cert;
}

Json ReportJson(const Report& report, bool time_labels) {
  Json searcher = Json::array();
  for (const WeightedSet& ws : report.searcher) {
    searcher.push_back(Json{{"set", ws.set.members()},
                            {"label", SetLabel(ws.set, report.spec, time_labels)},
                            {"probability", ToString(ws.probability)}});
  }
  Json doc{{"mode", ModeName(report.mode)},
           {"value", ValueJson(report.value)},
           {"hider", RationalArray(report.hider)},
           {"searcher", searcher},
           {"provenance", report.provenance},
           {"certificate", CertificateJson(report, time_labels)}};
  if (!report.closed_form.is_null()) doc["closed_form"] = report.closed_form;
  return doc;
}

void PrintReport(const Report& report, bool time_labels, std::ostream& out) {
  out << "mode         " << ModeName(report.mode) << "\n";
  out << "value        " << ToString(report.value) << "  (" << ToDecimal(report.value)
      << ")\n";
  out << "provenance   " << report.provenance << "\n";
  out << "certificate  " << (report.certificate.ok ? "ok" : "FAILED") << "\n\n";
  out << "hider\n";
  out << "  " << std::left << std::setw(10) << "location" << std::setw(8) << "time"
      << std::setw(10) << "capture" << "probability\n";
  for (int i = 1; i <= report.spec.num_locations(); ++i) {
    out << "  " << std::setw(10) << i << std::setw(8) << ToString(report.spec.time(i))
        << std::setw(10) << ToString(report.spec.capture_prob(i))
        << ToString(report.hider[static_cast<std::size_t>(i - 1)]) << "\n";
  }
  out << "\nsearcher\n";
  out << "  " << std::setw(16) << "set" << "probability\n";
  for (const WeightedSet& ws : report.searcher) {
    out << "  " << std::setw(16) << SetLabel(ws.set, report.spec, time_labels)
        << ToString(ws.probability) << "\n";
  }
  out << std::right;
}

// Writes according to --format/--output. JSON goes to --output when given.
void Emit(const Json& doc, const std::function<void(std::ostream&)>& table,
          const Options& options, std::ostream& out) {
  const bool want_table = options.format == "table" || options.format == "both";
  const bool want_json = options.format == "json" || options.format == "both";
  if (want_table) table(out);
  if (!want_json) return;
  const std::string text = doc.dump(2) + "\n";
  if (!options.output.empty()) {
    std::ofstream file(options.output, std::ios::binary);
    if (!file) throw GameFileError(options.output, "cannot write output file");
    file << text;
  } else {
    if (want_table) out << "\n";
    out << text;
  }
}

int RunLearning(const LearningSpec& spec, const Options& options, std::ostream& out) {
  const LearningSolution sol = SolveLearning(spec);
  std::optional<PosteriorResult> post;
  if (spec.low + spec.high > 0) post = PosteriorAfterEscape(spec, sol);
  const bool prefers_same = PrefersSameLocation(spec);

  Json matrix = Json::array();
  for (const auto& row : sol.matrix_a) {
    matrix.push_back(Json::array({ToString(row[0]), ToString(row[1])}));
  }
  Json doc{{"mode", "learning"},
           {"low", ToString(spec.low)},
           {"high", ToString(spec.high)},
           {"matrix_a", matrix},
           {"diag_y", Json::array({ToString(sol.diag_a), ToString(sol.diag_b)})},
           {"value", ValueJson(sol.value_a)},
           {"value_y", sol.value_y ? Json(ToString(*sol.value_y)) : Json(nullptr)},
           {"prob_rs", ToString(sol.prob_rs)},
           {"prob_rd", ToString(sol.prob_rd)},
           {"diagonal_shortcut", sol.diagonal_shortcut},
           {"prefers_same_location", prefers_same}};
  if (post) {
    doc["posterior"] = Json{{"prob_high_given_escape", ToString(post->prob_high_given_escape)},
                            {"expected_escape_next", ToString(post->expected_escape_next)},
                            {"implied_capture_x", ToString(post->implied_capture_x)},
                            {"q_low_capture", ToString(post->q_low_capture)}};
  } else {
    doc["posterior"] = nullptr;
  }

  Emit(doc, [&](std::ostream& o) {
    o << "escape probabilities  low " << ToString(spec.low) << ", high "
      << ToString(spec.high) << "\n\n";
    o << "matrix A (rows/cols rs, rd)\n";
    for (const auto& row : sol.matrix_a) {
      o << "  " << std::left << std::setw(12) << ToString(row[0]) << ToString(row[1])
        << "\n" << std::right;
    }
    o << "diagonal Y            (" << ToString(sol.diag_a) << ", " << ToString(sol.diag_b)
      << ")\n";
    o << "value V(A)            " << ToString(sol.value_a) << "  ("
      << ToDecimal(sol.value_a) << ")\n";
    if (sol.value_y) o << "value V(Y)            " << ToString(*sol.value_y) << "\n";
    o << "P(rs) / P(rd)         " << ToString(sol.prob_rs) << " / "
      << ToString(sol.prob_rd) << (sol.diagonal_shortcut ? "" : "  (LP; diagonal degenerate)")
      << "\n";
    if (post) {
      o << "P(high escape | escape)  " << ToString(post->prob_high_given_escape) << "\n";
      o << "expected escape next     " << ToString(post->expected_escape_next) << "\n";
      o << "implied capture x        " << ToString(post->implied_capture_x) << "\n";
      o << "posterior q              " << ToString(post->q_low_capture) << "\n";
    }
    o << "return to same location more often: " << (prefers_same ? "yes" : "no") << "\n";
  }, options, out);
  return kExitOk;
}

int CmdSolve(const Options& options, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const GameFile file = LoadGameFile(options.file);
  const GameMode mode = options.mode.empty() ? file.mode : ParseMode(options.mode);

  Report report;
  switch (mode) {
    case GameMode::kGeneral:
      report = SolveGeneralMode(file.GeneralGame(), options);
      break;
    case GameMode::kConstantTimes:
      report = SolveConstantTimesMode(file.GeneralGame(), options);
      break;
    case GameMode::kArithmeticTimes:
      report = SolveArithmeticMode(file.GeneralGame(), options);
      break;
    case GameMode::kTwoType:
      if (!file.two_type) throw GameFileError("two_type", "required by mode two-type");
      report = SolveTwoTypeMode(*file.two_type, options);
      break;
    case GameMode::kLearning:
      if (!file.learning) throw GameFileError("learning", "required by mode learning");
      return RunLearning(*file.learning, options, out);
  }

  Json doc = ReportJson(report, options.time_labels);
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (options.timing) doc["timing_ms"] = elapsed;
  Emit(doc, [&](std::ostream& o) {
    PrintReport(report, options.time_labels, o);
    if (options.timing) o << "\ntime         " << elapsed << " ms\n";
  }, options, out);
  return kExitOk;
}

int CmdSweep(const Options& options, std::ostream& out) {
  const GameFile file = LoadGameFile(options.file);
  const GameSpec base = file.GeneralGame();
  const std::vector<SweepRow> rows =
      SweepBudget(base, options.k_from, options.k_to, options.enumeration());

  std::vector<std::optional<Rational>> closed(rows.size());
  if (file.two_type && !file.game) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      TwoTypeSpec spec = *file.two_type;
      spec.k = options.k_from + static_cast<int>(i);
      try {
        closed[i] = SolveTwoType(spec).value;
      } catch (const OutsideRegimeError&) {
      }
    }
  }

  Json json_rows = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json ranges = Json::array();
    for (const CoordinateRange& r : rows[i].hider_range.ranges) {
      ranges.push_back(Json::array({ToString(r.min), ToString(r.max)}));
    }
    Json row{{"k", ToString(rows[i].budget)},
             {"value", ValueJson(rows[i].value)},
             {"hider", RationalArray(rows[i].hider)},
             {"hider_unique", rows[i].hider_range.unique},
             {"hider_ranges", ranges}};
    if (closed[i]) row["closed_form_value"] = ToString(*closed[i]);
    json_rows.push_back(std::move(row));
  }

  Emit(Json{{"rows", json_rows}}, [&](std::ostream& o) {
    o << std::left << std::setw(6) << "k";
    for (int i = 1; i <= base.num_locations(); ++i) {
      o << std::setw(9) << ("h" + std::to_string(i));
    }
    const bool closed_column = file.two_type && !file.game;
    o << std::setw(12) << "value" << std::setw(10) << "decimal";
    if (closed_column) {
      o << std::setw(8) << "unique" << "closed-form";
    } else {
      o << "unique";
    }
    o << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      o << std::setw(6) << ToString(rows[i].budget);
      for (const Rational& h : rows[i].hider) o << std::setw(9) << ToString(h);
      o << std::setw(12) << ToString(rows[i].value) << std::setw(10)
        << ToDecimal(rows[i].value, 4);
      const char* unique = rows[i].hider_range.unique ? "yes" : "no";
      if (closed_column) {
        o << std::setw(8) << unique << (closed[i] ? ToString(*closed[i]) : "-");
      } else {
        o << unique;
      }
      o << "\n";
    }
    o << std::right;
  }, options, out);
  return kExitOk;
}

int CmdLearning(const Options& options, std::ostream& out) {
  LearningSpec spec;
  try {
    spec.low = ParseRational(options.low);
    spec.high = ParseRational(options.high);
    spec.Validate();
  } catch (const std::invalid_argument& e) {
    throw GameFileError("--low/--high", e.what());
  }
  return RunLearning(spec, options, out);
}

int CmdVerify(const Options& options, std::ostream& out) {
  const GameFile file = LoadGameFile(options.file);
  const GameSpec spec = file.GeneralGame();
  const Json solution = ParseExactJson(ReadTextFile(options.solution_file));
  if (!solution.is_object()) throw GameFileError("solution", "expected an object");

  const Json& value_field = solution.contains("value") ? solution["value"] : Json();
  const Rational value = RationalField(
      value_field.is_object() && value_field.contains("fraction") ? value_field["fraction"]
                                                                   : value_field,
      "value");

  if (!solution.contains("hider") || !solution["hider"].is_array()) {
    throw GameFileError("hider", "expected an array");
  }
  std::vector<Rational> hider;
  for (std::size_t i = 0; i < solution["hider"].size(); ++i) {
    hider.push_back(RationalField(solution["hider"][i], "hider[" + std::to_string(i) + "]"));
  }
  if (static_cast<int>(hider.size()) != spec.num_locations()) {
    throw GameFileError("hider", "has " + std::to_string(hider.size()) +
                                     " entries for a game with " +
                                     std::to_string(spec.num_locations()) + " locations");
  }

  if (!solution.contains("searcher") || !solution["searcher"].is_array()) {
    throw GameFileError("searcher", "expected an array");
  }
  std::vector<WeightedSet> searcher;
  for (std::size_t i = 0; i < solution["searcher"].size(); ++i) {
    const std::string path = "searcher[" + std::to_string(i) + "]";
    const Json& entry = solution["searcher"][i];
    if (!entry.is_object() || !entry.contains("set") || !entry["set"].is_array()) {
      throw GameFileError(path, "expected {\"set\": [...], \"probability\": ...}");
    }
    std::vector<int> members;
    for (const Json& m : entry["set"]) {
      Rational q = RationalField(m, path + ".set");
      if (q.get_den() != 1 || !q.get_num().fits_sint_p()) {
        throw GameFileError(path + ".set", "location indices must be integers");
      }
      members.push_back(static_cast<int>(q.get_num().get_si()));
    }
    SearchSet set;
    try {
      set = SearchSet(members, spec);
    } catch (const std::invalid_argument& e) {
      throw GameFileError(path + ".set", e.what());
    }
    if (!set.IsFeasible(spec)) throw GameFileError(path + ".set", "set exceeds the budget");
    searcher.push_back({std::move(set),
                        RationalField(entry.contains("probability") ? entry["probability"] : Json(),
                                      path + ".probability")});
  }

  // Hider caps are checked on every undominated set plus any extra sets the
  // searcher uses.
  std::vector<SearchSet> rows = MaximalFeasibleSets(spec, options.enumeration());
  for (const WeightedSet& ws : searcher) {
    if (std::find(rows.begin(), rows.end(), ws.set) == rows.end()) rows.push_back(ws.set);
  }
  const PayoffMatrix matrix = BuildMatrix(spec, std::move(rows));
  const std::vector<Rational> searcher_rows = RowDistribution(matrix, searcher);
  if (!IsDistribution(hider) || !IsDistribution(searcher_rows)) {
    throw GameFileError("solution", "strategies must be probability vectors");
  }
  const Certificate cert = VerifyEquilibrium(matrix.entries, hider, searcher_rows, value);

  out << "claimed value  " << ToString(value) << "\n";
  if (cert.ok) {
    out << "certificate    ok\n";
    return kExitOk;
  }
  out << "certificate    FAILED\n";
  if (auto row = cert.WorstRow()) {
    out << "  hider slack " << ToString(cert.hider_slack[*row]) << " on row "
        << matrix.rows[*row].ToString() << "\n";
  }
  if (auto col = cert.WorstColumn()) {
    out << "  searcher slack " << ToString(cert.searcher_slack[*col]) << " on location "
        << *col + 1 << "\n";
  }
  return kExitVerificationFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for search-and-pursuit games", "search_pursuit"};
  app.require_subcommand(1);
  Options options;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", options.format, "Output: table, json or both")
        ->check(CLI::IsMember({"table", "json", "both"}));
    cmd->add_option("--output,-o", options.output, "Write the JSON document here");
  };
  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("file", options.file, "Game file (JSON)")->required();
    cmd->add_option("--max-subsets", options.max_subsets,
                    "Cap on enumerated feasible search sets");
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve a game file");
  add_game(solve);
  add_common(solve);
  solve->add_option("--mode", options.mode,
                    "general, constant-times, arithmetic-times, two-type or learning");
  solve->add_flag("--paper-names", options.time_labels,
                  "Label locations by their search times");
  solve->add_flag("--timing", options.timing, "Report wall-clock time");

  CLI::App* sweep = app.add_subcommand("sweep", "Solve for a range of budgets");
  add_game(sweep);
  add_common(sweep);
  sweep->add_option("--k-from", options.k_from, "First budget")->required();
  sweep->add_option("--k-to", options.k_to, "Last budget")->required();

  CLI::App* learning = app.add_subcommand("learning", "Two-period learning game");
  add_common(learning);
  learning->add_option("--low", options.low, "Low escape probability")->required();
  learning->add_option("--high", options.high, "High escape probability")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check a solution document");
  verify->add_option("file", options.file, "Game file (JSON)")->required();
  verify->add_option("solution", options.solution_file, "Result document (JSON)")
      ->required();
  verify->add_option("--max-subsets", options.max_subsets,
                     "Cap on enumerated feasible search sets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (solve->parsed()) return CmdSolve(options, out);
    if (sweep->parsed()) return CmdSweep(options, out);
    if (learning->parsed()) return CmdLearning(options, out);
    if (verify->parsed()) return CmdVerify(options, out);
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const MonotonicityError& e) {
    err << "internal error: value not monotone in k: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const VerificationError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInvalidInput;
}

}  // namespace search_pursuit
