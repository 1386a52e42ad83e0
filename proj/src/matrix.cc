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

#include "search_pursuit/matrix.h"

#include <stdexcept>

namespace search_pursuit {

std::size_t NumRows(const Matrix& m) { return m.size(); }

std::size_t NumCols(const Matrix& m) {
  if (m.empty() || m.front().empty()) {
    throw std::invalid_argument("matrix must be nonempty");
  }
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  return cols;
}

Matrix Transpose(const Matrix& m) {
  const std::size_t rows = NumRows(m);
  const std::size_t cols = NumCols(m);
  Matrix t(cols, std::vector<Rational>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  }
  return t;
}

Matrix Scale(const Matrix& m, const Rational& factor) {
  Matrix out = m;
  for (auto& row : out) {
    for (auto& x : row) x *= factor;
  }
  return out;
}

Matrix Diagonal(const std::vector<Rational>& diagonal) {
  const std::size_t n = diagonal.size();
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = diagonal[i];
  return m;
}

Rational ExpectedPayoff(const Matrix& m, const std::vector<Rational>& rows,
                        const std::vector<Rational>& cols) {
  if (rows.size() != NumRows(m) || cols.size() != NumCols(m)) {
    throw std::invalid_argument("strategy dimension mismatch");
  }
  Rational total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] == 0) continue;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      total += rows[r] * m[r][c] * cols[c];
    }
  }
  return total;
}

bool IsDistribution(const std::vector<Rational>& p) {
  Rational total = 0;
  for (const Rational& x : p) {
    if (sgn(x) < 0) return false;
    total += x;
  }
  return !p.empty() && total == 1;
}

}  // namespace search_pursuit
