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

#include "search_pursuit/oracle.h"

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <thread>

namespace search_pursuit {
namespace {

std::optional<std::size_t> MostNegative(const std::vector<Rational>& slack) {
  std::optional<std::size_t> worst;
  for (std::size_t i = 0; i < slack.size(); ++i) {
    if (sgn(slack[i]) < 0 && (!worst || slack[i] < slack[*worst])) worst = i;
  }
  return worst;
}

// Solves the square system a x = b by Gauss-Jordan elimination. Returns
// nullopt when a is singular.
std::optional<std::vector<Rational>> SolveLinearSystem(Matrix a,
                                                       std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
      b[r] -= factor * b[col];
    }
  }
  return b;
}

// Given supports I (rows) and J (cols) of equal size s, solves
//   sum_{j in J} M[i][j] y_j = v  (i in I),   sum y_j = 1
// for (y, v). With transpose=true the roles of rows and columns swap.
std::optional<std::pair<std::vector<Rational>, Rational>> Indifference(
    const Matrix& m, const std::vector<std::size_t>& equal_on,
    const std::vector<std::size_t>& support, bool transpose) {
  const std::size_t s = support.size();
  Matrix a(s + 1, std::vector<Rational>(s + 1, Rational(0)));
  std::vector<Rational> b(s + 1, Rational(0));
  for (std::size_t e = 0; e < s; ++e) {
    for (std::size_t k = 0; k < s; ++k) {
      a[e][k] = transpose ? m[support[k]][equal_on[e]] : m[equal_on[e]][support[k]];
    }
    a[e][s] = -1;
  }
  for (std::size_t k = 0; k < s; ++k) a[s][k] = 1;
  b[s] = 1;
  auto solution = SolveLinearSystem(std::move(a), std::move(b));
  if (!solution) return std::nullopt;
  Rational v = solution->back();
  solution->pop_back();
  return std::make_pair(std::move(*solution), std::move(v));
}

void ForEachSubset(std::size_t n, std::size_t size,
                   const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::size_t> Certificate::WorstRow() const {
  return MostNegative(hider_slack);
}

std::optional<std::size_t> Certificate::WorstColumn() const {
  return MostNegative(searcher_slack);
}

Certificate VerifyEquilibrium(const Matrix& matrix,
                              const std::vector<Rational>& hider_mix,
                              const std::vector<Rational>& searcher_mix,
                              const Rational& claimed_value) {
  const std::size_t rows = NumRows(matrix);
  const std::size_t cols = NumCols(matrix);
  if (hider_mix.size() != cols || searcher_mix.size() != rows) {
    throw std::invalid_argument(
        "strategy dimensions do not match the " + std::to_string(rows) + "x" +
        std::to_string(cols) + " matrix");
  }
  if (!IsDistribution(hider_mix) || !IsDistribution(searcher_mix)) {
    throw std::invalid_argument("strategies must be probability vectors");
  }

  Certificate cert;
  cert.claimed_value = claimed_value;
  cert.hider_slack.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational payoff = 0;
    for (std::size_t c = 0; c < cols; ++c) payoff += matrix[r][c] * hider_mix[c];
    cert.hider_slack[r] = claimed_value - payoff;
  }
  cert.searcher_slack.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Rational payoff = 0;
    for (std::size_t r = 0; r < rows; ++r) payoff += searcher_mix[r] * matrix[r][c];
    cert.searcher_slack[c] = payoff - claimed_value;
  }
  cert.ok = !cert.WorstRow() && !cert.WorstColumn();
  return cert;
}

MixedSolution SupportEnumerationSolve(const Matrix& matrix) {
  const std::size_t rows = NumRows(matrix);
  const std::size_t cols = NumCols(matrix);
  if (rows > kSupportEnumerationMaxDim || cols > kSupportEnumerationMaxDim) {
    throw std::invalid_argument("support enumeration is limited to 6x6");
  }

  std::optional<MixedSolution> found;
  for (std::size_t s = 1; s <= std::min(rows, cols) && !found; ++s) {
    ForEachSubset(rows, s, [&](const std::vector<std::size_t>& row_support) {
      ForEachSubset(cols, s, [&](const std::vector<std::size_t>& col_support) {
        auto hider = Indifference(matrix, row_support, col_support, false);
        if (!hider) return false;
        auto searcher = Indifference(matrix, col_support, row_support, true);
        if (!searcher || searcher->second != hider->second) return false;
        auto negative = [](const std::vector<Rational>& x) {
          return std::any_of(x.begin(), x.end(),
                             [](const Rational& q) { return sgn(q) < 0; });
        };
        if (negative(hider->first) || negative(searcher->first)) return false;

        MixedSolution candidate;
        candidate.value = hider->second;
        candidate.col_strategy.assign(cols, Rational(0));
        candidate.row_strategy.assign(rows, Rational(0));
        for (std::size_t k = 0; k < s; ++k) {
          candidate.col_strategy[col_support[k]] = hider->first[k];
          candidate.row_strategy[row_support[k]] = searcher->first[k];
        }
        if (!VerifyEquilibrium(matrix, candidate.col_strategy,
                               candidate.row_strategy, candidate.value)
                 .ok) {
          return false;
        }
        found = std::move(candidate);
        return true;
      });
      return found.has_value();
    });
  }
  if (!found) {
    // Every finite zero-sum game has an extreme equilibrium on a square
    // nonsingular bordered support, so this is unreachable.
    throw std::logic_error("support enumeration found no equilibrium");
  }
  return *found;
}

std::vector<SweepRow> SweepBudget(const GameSpec& base, int k_from, int k_to,
                                  const EnumerationOptions& options) {
  if (k_from > k_to) throw std::invalid_argument("empty budget range");
  if (k_from < 0) throw std::invalid_argument("budget must be nonnegative");
  base.Validate();

  auto solve_at = [&base, &options](int k) {
    GameSpec spec = base;
    spec.budget = k;
    GameSolution solved = SolveGame(spec, options);
    SweepRow row;
    row.budget = spec.budget;
    row.value = solved.solution.value;
    row.hider = solved.solution.col_strategy;
    row.hider_range = HiderUniqueness(solved.matrix.entries, row.value);
    return row;
  };

  // Budgets are independent; evaluate them in bounded batches and collect in
  // k order.
  const int batch = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(k_to - k_from + 1));
  for (int start = k_from; start <= k_to; start += batch) {
    std::vector<std::future<SweepRow>> pending;
    for (int k = start; k <= k_to && k < start + batch; ++k) {
      pending.push_back(std::async(std::launch::async, solve_at, k));
    }
    for (auto& f : pending) rows.push_back(f.get());
  }

  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].value < rows[i - 1].value) {
      throw MonotonicityError("value decreased from " + ToString(rows[i - 1].value) +
                              " at k=" + ToString(rows[i - 1].budget) + " to " +
                              ToString(rows[i].value) + " at k=" +
                              ToString(rows[i].budget));
    }
  }
  return rows;
}

}  // namespace search_pursuit
