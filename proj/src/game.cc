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

#include "search_pursuit/game.h"

#include <algorithm>
#include <functional>
#include <optional>

namespace search_pursuit {

void GameSpec::Validate() const {
  if (times.empty()) throw std::invalid_argument("game needs at least one location");
  if (times.size() != capture.size()) {
    throw std::invalid_argument("times and capture probabilities differ in length");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    const std::string where = "location " + std::to_string(i + 1);
    if (sgn(times[i]) <= 0) {
      throw std::invalid_argument(where + ": search time must be positive");
    }
    if (sgn(capture[i]) <= 0 || capture[i] > 1) {
      throw std::invalid_argument(where + ": capture probability must be in (0,1]");
    }
  }
  if (sgn(budget) < 0) throw std::invalid_argument("budget must be nonnegative");
}

std::vector<Rational> ArithmeticTimes(int n) {
  std::vector<Rational> times;
  times.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) times.emplace_back(i);
  return times;
}

SearchSet::SearchSet(std::vector<int> members, const GameSpec& spec)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int location : members_) {
    if (location < 1 || location > spec.num_locations()) {
      throw std::invalid_argument("location " + std::to_string(location) +
                                  " out of range");
    }
    total_time_ += spec.time(location);
  }
}

bool SearchSet::Contains(int location) const {
  return std::binary_search(members_.begin(), members_.end(), location);
}

std::string SearchSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

std::string SearchSet::ToTimeLabel(const GameSpec& spec) const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += search_pursuit::ToString(spec.time(members_[i]));
  }
  return out + "}";
}

bool ShortlexLess(const SearchSet& a, const SearchSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

HiderStrategy::HiderStrategy(std::vector<Rational> probabilities)
    : h_(std::move(probabilities)) {
  if (!IsDistribution(h_)) {
    throw std::invalid_argument("hider strategy must be a probability vector");
  }
}

HiderStrategy HiderStrategy::PointMass(int n, int location) {
  std::vector<Rational> h(static_cast<std::size_t>(n), Rational(0));
  h.at(static_cast<std::size_t>(location - 1)) = 1;
  return HiderStrategy(std::move(h));
}

KnapsackInstance KnapsackInstance::FromGame(const GameSpec& spec,
                                            const HiderStrategy& hider) {
  if (hider.num_locations() != spec.num_locations()) {
    throw std::invalid_argument("hider strategy has wrong length");
  }
  KnapsackInstance instance;
  instance.weights = spec.times;
  instance.capacity = spec.budget;
  for (int i = 1; i <= spec.num_locations(); ++i) {
    instance.benefits.push_back(hider.at(i) * spec.capture_prob(i));
  }
  return instance;
}

std::vector<SearchSet> FeasibleSets(const GameSpec& spec,
                                    const EnumerationOptions& options) {
  spec.Validate();
  const int n = spec.num_locations();
  std::vector<SearchSet> out;
  std::vector<int> current;

  // Depth-first in lexicographic order; every visited node is feasible.
  std::function<void(int, const Rational&)> visit = [&](int next,
                                                         const Rational& used) {
    if (out.size() >= options.max_subsets) {
      throw EnumerationLimitError(
          "instance too large for exhaustive enumeration (more than " +
          std::to_string(options.max_subsets) + " feasible sets)");
    }
    out.emplace_back(current, spec);
    for (int j = next; j <= n; ++j) {
      Rational total = used + spec.time(j);
      if (total > spec.budget) continue;
      current.push_back(j);
      visit(j + 1, total);
      current.pop_back();
    }
  };
  visit(1, Rational(0));

  std::stable_sort(out.begin(), out.end(), ShortlexLess);
  return out;
}

std::vector<SearchSet> MaximalFeasibleSets(const GameSpec& spec,
                                           const EnumerationOptions& options) {
  std::vector<SearchSet> feasible = FeasibleSets(spec, options);
  const int n = spec.num_locations();
  std::vector<SearchSet> out;
  // Times are positive, so a feasible strict superset exists iff a single
  // missing location still fits.
  for (SearchSet& set : feasible) {
    bool maximal = true;
    for (int j = 1; j <= n && maximal; ++j) {
      if (!set.Contains(j) && set.total_time() + spec.time(j) <= spec.budget) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(std::move(set));
  }
  return out;
}

PayoffMatrix BuildMatrix(const GameSpec& spec, std::vector<SearchSet> rows) {
  const int n = spec.num_locations();
  PayoffMatrix matrix;
  matrix.entries.reserve(rows.size());
  for (const SearchSet& set : rows) {
    if (!set.IsFeasible(spec)) {
      throw std::invalid_argument("search set " + set.ToString() +
                                  " exceeds the budget");
    }
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    for (int location : set.members()) {
      if (location > n) throw std::invalid_argument("location out of range");
      row[static_cast<std::size_t>(location - 1)] = spec.capture_prob(location);
    }
    matrix.entries.push_back(std::move(row));
  }
  matrix.rows = std::move(rows);
  return matrix;
}

std::vector<Rational> RowDistribution(const PayoffMatrix& matrix,
                                      const std::vector<WeightedSet>& mix) {
  std::vector<Rational> out(matrix.rows.size(), Rational(0));
  for (const WeightedSet& entry : mix) {
    if (entry.probability == 0) continue;
    auto it = std::find(matrix.rows.begin(), matrix.rows.end(), entry.set);
    if (it == matrix.rows.end()) {
      throw std::invalid_argument("set " + entry.set.ToString() +
                                  " is not a row of the payoff matrix");
    }
    out[static_cast<std::size_t>(it - matrix.rows.begin())] += entry.probability;
  }
  return out;
}

BestResponse BestResponseValue(const GameSpec& spec, const HiderStrategy& hider,
                               const EnumerationOptions& options) {
  const KnapsackInstance knapsack = KnapsackInstance::FromGame(spec, hider);
  std::vector<SearchSet> candidates = MaximalFeasibleSets(spec, options);
  std::optional<BestResponse> best;
  for (SearchSet& set : candidates) {
    Rational benefit = 0;
    for (int location : set.members()) {
      benefit += knapsack.benefits[static_cast<std::size_t>(location - 1)];
    }
    if (!best || benefit > best->value ||
        (benefit == best->value && set.members() < best->set.members())) {
      best = BestResponse{std::move(set), benefit};
    }
  }
  return *best;
}

}  // namespace search_pursuit
