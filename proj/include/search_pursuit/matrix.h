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

#ifndef SEARCH_PURSUIT_MATRIX_H_
#define SEARCH_PURSUIT_MATRIX_H_

#include <cstddef>
#include <vector>

#include "search_pursuit/rational.h"

namespace search_pursuit {

// Dense row-major payoff matrix. Rows belong to the maximizing searcher,
// columns to the minimizing hider.
using Matrix = std::vector<std::vector<Rational>>;

// Optimal play of a zero-sum matrix game.
struct MixedSolution {
  Rational value;
  std::vector<Rational> row_strategy;  // searcher
  std::vector<Rational> col_strategy;  // hider
};

std::size_t NumRows(const Matrix& m);
// Throws std::invalid_argument on an empty or ragged matrix.
std::size_t NumCols(const Matrix& m);

Matrix Transpose(const Matrix& m);
Matrix Scale(const Matrix& m, const Rational& factor);
Matrix Diagonal(const std::vector<Rational>& diagonal);

// Payoff to the searcher of row mix `rows` against column mix `cols`.
Rational ExpectedPayoff(const Matrix& m, const std::vector<Rational>& rows,
                        const std::vector<Rational>& cols);

bool IsDistribution(const std::vector<Rational>& p);

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_MATRIX_H_
