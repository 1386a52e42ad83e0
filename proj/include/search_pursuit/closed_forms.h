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

#ifndef SEARCH_PURSUIT_CLOSED_FORMS_H_
#define SEARCH_PURSUIT_CLOSED_FORMS_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "search_pursuit/game.h"
#include "search_pursuit/rational.h"

namespace search_pursuit {

// A closed form was asked for outside the parameter range where it holds.
class OutsideRegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Unit search times, budget k locations.

enum class ConstantTimeRegime { kInterior, kCorner };

struct ConstantTimeSolution {
  Rational lambda_sum;  // sum of 1/p_i
  ConstantTimeRegime regime = ConstantTimeRegime::kInterior;
  std::vector<Rational> hider;  // indexed like the input capture vector
  Rational value;
};

// value = min(k / sum(1/p_i), p_min). In the interior regime (including the
// boundary) h_i is proportional to 1/p_i; otherwise the hider sits at the
// first location with the smallest capture probability. The input need not
// be sorted. Requires 1 <= k <= n.
ConstantTimeSolution SolveConstantTimes(const std::vector<Rational>& capture,
                                        int k);

// ---------------------------------------------------------------------------
// t_i = i, k = n, capture decreasing in i.

struct ArithmeticTimesSolution {
  int n = 0;
  int m = 0;  // n = 2m+1, or n = 2m for the even case
  bool even = false;
  bool strictly_decreasing = false;
  // Odd n: S = sum_{j=m+1}^{n} 1/p_j. Even n: S = sum_{j=m}^{n} 1/p_j.
  Rational s_sum;
  std::vector<Rational> hider;  // 1/(p_j S) on the support, else 0
  // {j, n-j} with probability 1/(p_j S), where {n,0} means {n}. Even n adds
  // {m, m-1, 1} (or the part of it that exists) for location m.
  std::vector<WeightedSet> searcher;
  Rational value;                     // 1/S
  // The (hider, searcher, value) triple certified on the full game.
  bool verified = false;
};

// The game G(n, (1..n), p, n).
GameSpec ArithmeticTimesGame(const std::vector<Rational>& capture);

// Pairs location j > m with n - j. Every result, odd or even, is certified
// against the full game and the outcome stored in `verified`.
ArithmeticTimesSolution SolveArithmeticTimes(const std::vector<Rational>& capture,
                                             const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// When does the hider do no better than the last location, t_i = i?

struct ThresholdCheckResult {
  bool holds = false;  // the game value equals p_n
  // Value of G(n-1, (1..n-1), (p_1..p_{n-1}), k-n); nullopt when n = 1, in
  // which case the empty residual game counts as +infinity.
  std::optional<Rational> reduced_value;
};

// Requires t_i = i and k >= n.
ThresholdCheckResult CheckLastLocationThreshold(
    const GameSpec& spec, const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Two location types: a of (time 1, capture p) and b of (time tau, capture q).

struct TwoTypeSpec {
  int a = 0;
  int b = 0;
  int tau = 1;
  Rational p;
  Rational q;
  int k = 0;

  // Basic well-formedness; the regime itself is checked by SolveTwoType.
  void Validate() const;
};

struct TwoTypeSolution {
  Rational y_bar;  // probability of hiding at a type 1 location
  Rational j_hat;  // mean number of type 2 locations inspected
  int m = 0;       // floor(k / tau)
  Rational value;
  std::vector<Rational> searcher_mix;  // x_j over j = 0..m
};

// Searcher wins with P(j, y) when inspecting j type 2 locations (and k - tau j
// of type 1) against a hider who picks type 1 with probability y.
Rational TwoTypePayoff(const TwoTypeSpec& spec, int j, const Rational& y);

// Throws OutsideRegimeError unless a >= k, b tau >= k and the mean j_hat is
// reachable with at most m type 2 inspections.
TwoTypeSolution SolveTwoType(const TwoTypeSpec& spec);

// Locations 1..a are type 1, a+1..a+b are type 2.
GameSpec ExpandTwoType(const TwoTypeSpec& spec);
std::vector<Rational> ExpandTwoTypeHider(const TwoTypeSpec& spec,
                                         const TwoTypeSolution& solution);
// Spreads x_j uniformly over the concrete sets with j type 2 members.
std::vector<WeightedSet> ExpandTwoTypeSearcher(const TwoTypeSpec& spec,
                                               const TwoTypeSolution& solution,
                                               const EnumerationOptions& options = {});

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_CLOSED_FORMS_H_
