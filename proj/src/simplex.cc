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

#include "search_pursuit/simplex.h"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace search_pursuit {
namespace {

// Dense tableau. Row i of `rows_` holds B^-1 A | B^-1 b; `cost_` holds the
// reduced costs z_j - c_j and, in its last slot, the current objective.
class Tableau {
 public:
  Tableau(std::size_t num_rows, std::size_t num_cols)
      : rows_(num_rows, std::vector<Rational>(num_cols + 1, Rational(0))),
        cost_(num_cols + 1, Rational(0)),
        basis_(num_rows, 0),
        num_cols_(num_cols) {}

  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  Rational& rhs(std::size_t r) { return rows_[r][num_cols_]; }
  const Rational& rhs(std::size_t r) const { return rows_[r][num_cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return num_cols_; }
  const Rational& reduced_cost(std::size_t c) const { return cost_[c]; }
  const Rational& objective() const { return cost_[num_cols_]; }

  // Installs cost vector `c` (maximization) and prices out the basis.
  void SetObjective(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j <= num_cols_; ++j) {
      Rational z = 0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& cb = c[basis_[r]];
        if (cb != 0) z += cb * rows_[r][j];
      }
      cost_[j] = j < num_cols_ ? Rational(z - c[j]) : z;
    }
  }

  void Pivot(std::size_t pivot_row, std::size_t pivot_col) {
    std::vector<Rational>& prow = rows_[pivot_row];
    const Rational inv = 1 / prow[pivot_col];
    for (Rational& x : prow) x *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational factor = row[pivot_col];
      if (factor == 0) return;
      for (std::size_t j = 0; j <= num_cols_; ++j) {
        if (prow[j] != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != pivot_row) eliminate(rows_[r]);
    }
    eliminate(cost_);
    basis_[pivot_row] = pivot_col;
  }

  // Pivots to optimality over the columns with allowed[j] set. Entering
  // columns follow Dantzig's rule (most negative reduced cost, lowest index
  // on ties), except that after a degenerate pivot Bland's rule takes over
  // until the objective moves again; a cycle would need an endless run of
  // degenerate pivots, which Bland's rule cannot produce.
  // Returns false if the objective is unbounded.
  bool Optimize(const std::vector<bool>& allowed) {
    bool degenerate = false;
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!allowed[j] || sgn(cost_[j]) >= 0) continue;
        if (!entering || cost_[j] < cost_[*entering]) entering = j;
        if (degenerate) break;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][*entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rhs(r) / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      degenerate = sgn(best_ratio) == 0;
      Pivot(*leaving, *entering);
    }
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::size_t num_cols_;
};

}  // namespace

LpResult Maximize(const LinearProgram& program) {
  const std::size_t n = program.objective.size();
  const std::size_t m = program.constraints.size();
  for (const LinearConstraint& con : program.constraints) {
    if (con.coefficients.size() != n) {
      throw std::invalid_argument("constraint width does not match objective");
    }
  }

  // Normalize to b >= 0 and count auxiliary columns.
  std::vector<bool> negated(m, false);
  std::vector<Relation> relation(m);
  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& con = program.constraints[i];
    relation[i] = con.relation;
    if (sgn(con.rhs) < 0) {
      negated[i] = true;
      if (relation[i] == Relation::kLessEqual) {
        relation[i] = Relation::kGreaterEqual;
      } else if (relation[i] == Relation::kGreaterEqual) {
        relation[i] = Relation::kLessEqual;
      }
    }
    if (relation[i] != Relation::kEqual) ++num_slack;
    if (relation[i] != Relation::kLessEqual) ++num_artificial;
  }

  // Columns: [original | slack/surplus | artificial].
  const std::size_t total = n + num_slack + num_artificial;
  Tableau tableau(m, total);
  std::vector<bool> is_artificial(total, false);
  // The column carrying +e_i for row i; its final reduced cost is the dual.
  std::vector<std::size_t> identity_col(m);
  std::size_t next_slack = n;
  std::size_t next_artificial = n + num_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& con = program.constraints[i];
    const int sign = negated[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tableau.at(i, j) = sign * con.coefficients[j];
    tableau.rhs(i) = sign * con.rhs;
    switch (relation[i]) {
      case Relation::kLessEqual:
        tableau.at(i, next_slack) = 1;
        identity_col[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        tableau.at(i, next_slack++) = -1;
        [[fallthrough]];
      case Relation::kEqual:
        tableau.at(i, next_artificial) = 1;
        is_artificial[next_artificial] = true;
        identity_col[i] = next_artificial++;
        break;
    }
    tableau.basic(i) = identity_col[i];
  }

  LpResult result;
  std::vector<bool> allowed(total, true);
  if (num_artificial > 0) {
    std::vector<Rational> phase_one(total, Rational(0));
    for (std::size_t j = 0; j < total; ++j) {
      if (is_artificial[j]) phase_one[j] = -1;
    }
    tableau.SetObjective(phase_one);
    tableau.Optimize(allowed);
    if (sgn(tableau.objective()) < 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and keep a zero artificial.
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_artificial[tableau.basic(r)]) continue;
      for (std::size_t j = 0; j < total; ++j) {
        if (!is_artificial[j] && tableau.at(r, j) != 0) {
          tableau.Pivot(r, j);
          break;
        }
      }
    }
    for (std::size_t j = 0; j < total; ++j) allowed[j] = !is_artificial[j];
  }

  std::vector<Rational> cost(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = program.objective[j];
  tableau.SetObjective(cost);
  if (!tableau.Optimize(allowed)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.objective = tableau.objective();
  result.primal.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (tableau.basic(r) < n) result.primal[tableau.basic(r)] = tableau.rhs(r);
  }
  result.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& y = tableau.reduced_cost(identity_col[i]);
    result.dual[i] = negated[i] ? Rational(-y) : y;
  }
  return result;
}

}  // namespace search_pursuit
