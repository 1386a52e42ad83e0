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

#ifndef SEARCH_PURSUIT_LP_SOLVER_H_
#define SEARCH_PURSUIT_LP_SOLVER_H_

#include <vector>

#include "search_pursuit/game.h"
#include "search_pursuit/matrix.h"
#include "search_pursuit/rational.h"

namespace search_pursuit {

// Exact minimax solution: the row player maximizes, the column player
// minimizes. Among several optimal strategies the one reached by the
// deterministic pivot order is returned.
//
// The matrix is first mapped affinely onto entries in [1,2], so positive
// rescalings of the input walk the same pivot path and return identical
// strategies.
MixedSolution SolveZeroSum(const Matrix& matrix);
MixedSolution SolveZeroSum(const PayoffMatrix& matrix);

// Diagonal game with d_i > 0: v = 1 / sum(1/d_i), both players pick i with
// probability v / d_i. Throws std::invalid_argument on d_i <= 0.
MixedSolution SolveDiagonal(const std::vector<Rational>& diagonal);

struct CoordinateRange {
  Rational min;
  Rational max;
  bool degenerate() const { return min == max; }
};

// Range of each coordinate over a player's optimal-strategy polytope.
struct UniquenessReport {
  std::vector<CoordinateRange> ranges;
  bool unique = true;

  // The optimal strategy when unique; min endpoints otherwise.
  std::vector<Rational> LowerEnds() const;
};

// Minimizes and maximizes each hider coordinate over
// { h in simplex : (M h)_r <= value for every row r }.
// Throws std::invalid_argument if that set is empty (wrong `value`).
UniquenessReport HiderUniqueness(const Matrix& matrix, const Rational& value);

// Same probe for the searcher: { x in simplex : (x M)_c >= value }.
UniquenessReport SearcherUniqueness(const Matrix& matrix, const Rational& value);

// The general pipeline: maximal sets -> payoff matrix -> LP.
struct GameSolution {
  PayoffMatrix matrix;
  MixedSolution solution;
};
GameSolution SolveGame(const GameSpec& spec,
                       const EnumerationOptions& options = {});

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_LP_SOLVER_H_
