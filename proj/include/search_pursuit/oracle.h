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

#ifndef SEARCH_PURSUIT_ORACLE_H_
#define SEARCH_PURSUIT_ORACLE_H_

// Independent checks for the solvers. Nothing here calls the simplex code
// except SweepBudget, which is a driver over the general pipeline.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "search_pursuit/game.h"
#include "search_pursuit/lp_solver.h"
#include "search_pursuit/matrix.h"
#include "search_pursuit/rational.h"

namespace search_pursuit {

// Exact two-sided equilibrium check.
//   hider_slack[r]    = v - (M h)_r        (hider caps row r at v)
//   searcher_slack[c] = (x M)_c - v        (searcher attains v at column c)
struct Certificate {
  Rational claimed_value;
  std::vector<Rational> hider_slack;
  std::vector<Rational> searcher_slack;
  bool ok = false;

  // Index of the most negative slack on each side, if any is negative.
  std::optional<std::size_t> WorstRow() const;
  std::optional<std::size_t> WorstColumn() const;
};

// `hider_mix` is over columns, `searcher_mix` over rows. Throws
// std::invalid_argument on a dimension mismatch or a non-distribution.
Certificate VerifyEquilibrium(const Matrix& matrix,
                              const std::vector<Rational>& hider_mix,
                              const std::vector<Rational>& searcher_mix,
                              const Rational& claimed_value);

inline constexpr std::size_t kSupportEnumerationMaxDim = 6;

// Enumerates equal-size support pairs, solves the bordered indifference
// systems by exact elimination and returns the first pair that certifies.
// Throws std::invalid_argument beyond 6x6.
MixedSolution SupportEnumerationSolve(const Matrix& matrix);

class MonotonicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepRow {
  Rational budget;
  Rational value;
  std::vector<Rational> hider;  // the LP's optimal hider strategy
  UniquenessReport hider_range;
};

// Solves G(n,t,p,k) for k = k_from..k_to (integer steps) and probes hider
// uniqueness at each k. Rows come back ordered by k. Throws
// MonotonicityError if the value ever decreases.
std::vector<SweepRow> SweepBudget(const GameSpec& base, int k_from, int k_to,
                                  const EnumerationOptions& options = {});

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_ORACLE_H_
