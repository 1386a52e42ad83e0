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

#ifndef SEARCH_PURSUIT_GAME_H_
#define SEARCH_PURSUIT_GAME_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "search_pursuit/matrix.h"
#include "search_pursuit/rational.h"

namespace search_pursuit {

// Raised when exhaustive enumeration of search sets would exceed the cap.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The search game over n locations. Location i (1-based) takes times[i-1] to
// inspect and, once found there, the hider is captured with probability
// capture[i-1]. The searcher may inspect any set whose total time is at most
// `budget`.
struct GameSpec {
  std::vector<Rational> times;
  std::vector<Rational> capture;
  Rational budget;

  int num_locations() const { return static_cast<int>(times.size()); }
  const Rational& time(int location) const { return times.at(location - 1); }
  const Rational& capture_prob(int location) const {
    return capture.at(location - 1);
  }

  // Throws std::invalid_argument unless 0 < p_i <= 1, t_i > 0, k >= 0 and
  // both vectors have n >= 1 entries.
  void Validate() const;
};

// Locations 1..n with t_i = i.
std::vector<Rational> ArithmeticTimes(int n);

// A set of distinct 1-based locations with its cached total search time.
class SearchSet {
 public:
  SearchSet() = default;
  // Sorts and deduplicates `members`; throws on an index outside 1..n.
  SearchSet(std::vector<int> members, const GameSpec& spec);

  const std::vector<int>& members() const { return members_; }
  const Rational& total_time() const { return total_time_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(int location) const;
  bool IsFeasible(const GameSpec& spec) const {
    return total_time_ <= spec.budget;
  }

  // "{2,3}" using location indices.
  std::string ToString() const;
  // "{3,4}" naming each location by its search time.
  std::string ToTimeLabel(const GameSpec& spec) const;

  friend bool operator==(const SearchSet& a, const SearchSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<int> members_;
  Rational total_time_ = 0;
};

// Shortlex order: smaller sets first, then lexicographic by members.
bool ShortlexLess(const SearchSet& a, const SearchSet& b);

// A hider mixed strategy; h[i-1] is the probability of hiding at location i.
class HiderStrategy {
 public:
  // Throws std::invalid_argument unless entries are >= 0 and sum to 1.
  explicit HiderStrategy(std::vector<Rational> probabilities);
  static HiderStrategy PointMass(int n, int location);

  const std::vector<Rational>& probabilities() const { return h_; }
  const Rational& at(int location) const { return h_.at(location - 1); }
  int num_locations() const { return static_cast<int>(h_.size()); }

 private:
  std::vector<Rational> h_;
};

// Rows are search sets, columns are locations 1..n.
struct PayoffMatrix {
  std::vector<SearchSet> rows;
  Matrix entries;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const {
    return entries.empty() ? 0 : entries.front().size();
  }
};

// The searcher's best-response problem against a known hider mix.
struct KnapsackInstance {
  std::vector<Rational> weights;   // t_i
  std::vector<Rational> benefits;  // h_i * p_i
  Rational capacity;               // k

  static KnapsackInstance FromGame(const GameSpec& spec,
                                   const HiderStrategy& hider);
};

// A searcher mixed strategy expressed over named sets.
struct WeightedSet {
  SearchSet set;
  Rational probability;
};

// Lays `mix` out over the rows of `matrix`. Throws std::invalid_argument if a
// set with positive weight is not one of the rows.
std::vector<Rational> RowDistribution(const PayoffMatrix& matrix,
                                      const std::vector<WeightedSet>& mix);

struct EnumerationOptions {
  std::size_t max_subsets = std::size_t{1} << 22;
};

// All sets with T(A) <= k, including the empty set, in shortlex order.
std::vector<SearchSet> FeasibleSets(const GameSpec& spec,
                                    const EnumerationOptions& options = {});

// Feasible sets with no feasible strict superset. These are the undominated
// searcher strategies. The empty set appears only when no location fits.
std::vector<SearchSet> MaximalFeasibleSets(
    const GameSpec& spec, const EnumerationOptions& options = {});

// entry(A, i) = p_i if i in A, else 0. Row order follows `rows`.
PayoffMatrix BuildMatrix(const GameSpec& spec, std::vector<SearchSet> rows);

struct BestResponse {
  SearchSet set;
  Rational value;
};

// Exhaustive knapsack over the maximal sets. Ties go to the lexicographically
// smallest member list.
BestResponse BestResponseValue(const GameSpec& spec, const HiderStrategy& hider,
                               const EnumerationOptions& options = {});

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_GAME_H_
