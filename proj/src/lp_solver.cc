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

#include "search_pursuit/lp_solver.h"

#include <algorithm>
#include <stdexcept>

#include "search_pursuit/simplex.h"

namespace search_pursuit {

namespace {

// LP with one variable per column and one constraint per row.
MixedSolution SolveByColumns(const Matrix& matrix) {
  const std::size_t rows = NumRows(matrix);
  const std::size_t cols = NumCols(matrix);

  Rational lo = matrix[0][0];
  Rational hi = matrix[0][0];
  for (const auto& row : matrix) {
    for (const Rational& x : row) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const Rational range = hi == lo ? Rational(1) : Rational(hi - lo);

  // With M' = (M - lo) / range + 1 >= 1 the hider's problem is
  //   max 1.y  s.t.  M' y <= 1,  y >= 0,
  // whose optimum is 1 / v'. The row duals scaled by v' are the searcher's
  // strategy.
  LinearProgram lp;
  lp.objective.assign(cols, Rational(1));
  for (std::size_t r = 0; r < rows; ++r) {
    LinearConstraint con;
    con.coefficients.resize(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      con.coefficients[c] = (matrix[r][c] - lo) / range + 1;
    }
    con.relation = Relation::kLessEqual;
    con.rhs = 1;
    lp.constraints.push_back(std::move(con));
  }
  LpResult result = Maximize(lp);
  if (result.status != LpStatus::kOptimal || sgn(result.objective) <= 0) {
    throw std::logic_error("minimax LP did not reach an optimum");
  }

  const Rational shifted_value = 1 / result.objective;
  MixedSolution solution;
  solution.value = (shifted_value - 1) * range + lo;
  solution.col_strategy.reserve(cols);
  for (const Rational& y : result.primal) {
    solution.col_strategy.push_back(y * shifted_value);
  }
  solution.row_strategy.reserve(rows);
  for (const Rational& u : result.dual) {
    solution.row_strategy.push_back(u * shifted_value);
  }
  return solution;
}

}  // namespace

MixedSolution SolveZeroSum(const Matrix& matrix) {
  // Tableau work grows with the constraint count, so keep the smaller
  // dimension as constraints: a tall game is solved as its negated
  // transpose, where the players swap roles.
  if (NumRows(matrix) <= NumCols(matrix)) return SolveByColumns(matrix);
  const MixedSolution swapped = SolveByColumns(Scale(Transpose(matrix), Rational(-1)));
  return {-swapped.value, swapped.col_strategy, swapped.row_strategy};
}

MixedSolution SolveZeroSum(const PayoffMatrix& matrix) {
  return SolveZeroSum(matrix.entries);
}

MixedSolution SolveDiagonal(const std::vector<Rational>& diagonal) {
  if (diagonal.empty()) throw std::invalid_argument("empty diagonal");
  Rational inverse_sum = 0;
  for (const Rational& d : diagonal) {
    if (sgn(d) <= 0) {
      throw std::invalid_argument("diagonal entries must be positive, got " +
                                  ToString(d));
    }
    inverse_sum += 1 / d;
  }
  MixedSolution solution;
  solution.value = 1 / inverse_sum;
  for (const Rational& d : diagonal) {
    solution.row_strategy.push_back(solution.value / d);
  }
  solution.col_strategy = solution.row_strategy;
  return solution;
}

std::vector<Rational> UniquenessReport::LowerEnds() const {
  std::vector<Rational> out;
  out.reserve(ranges.size());
  for (const CoordinateRange& r : ranges) out.push_back(r.min);
  return out;
}

namespace {

// Coordinate ranges over { x in simplex : (x A)_c <= bound for every c },
// where x indexes the rows of `a`.
UniquenessReport ProbeRanges(const Matrix& a, const Rational& bound) {
  const std::size_t dim = NumRows(a);
  const std::size_t cons = NumCols(a);
  LinearProgram lp;
  for (std::size_t c = 0; c < cons; ++c) {
    LinearConstraint con;
    con.coefficients.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) con.coefficients[i] = a[i][c];
    con.relation = Relation::kLessEqual;
    con.rhs = bound;
    lp.constraints.push_back(std::move(con));
  }
  lp.constraints.push_back(
      {std::vector<Rational>(dim, Rational(1)), Relation::kEqual, Rational(1)});

  UniquenessReport report;
  for (std::size_t i = 0; i < dim; ++i) {
    CoordinateRange range;
    for (int direction : {1, -1}) {
      lp.objective.assign(dim, Rational(0));
      lp.objective[i] = direction;
      LpResult result = Maximize(lp);
      if (result.status == LpStatus::kInfeasible) {
        throw std::invalid_argument(
            "no strategy meets the claimed value " + ToString(bound) +
            "; it is not the value of this game");
      }
      if (result.status != LpStatus::kOptimal) {
        throw std::logic_error("bounded coordinate probe reported unbounded");
      }
      (direction == 1 ? range.max : range.min) = result.primal[i];
    }
    report.unique = report.unique && range.degenerate();
    report.ranges.push_back(std::move(range));
  }
  return report;
}

}  // namespace

UniquenessReport HiderUniqueness(const Matrix& matrix, const Rational& value) {
  return ProbeRanges(Transpose(matrix), value);
}

UniquenessReport SearcherUniqueness(const Matrix& matrix, const Rational& value) {
  // x M >= v  <=>  x (-M) <= -v.
  return ProbeRanges(Scale(matrix, Rational(-1)), -value);
}

GameSolution SolveGame(const GameSpec& spec, const EnumerationOptions& options) {
  GameSolution out;
  out.matrix = BuildMatrix(spec, MaximalFeasibleSets(spec, options));
  out.solution = SolveZeroSum(out.matrix);
  return out;
}

}  // namespace search_pursuit
