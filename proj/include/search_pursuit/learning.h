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

#ifndef SEARCH_PURSUIT_LEARNING_H_
#define SEARCH_PURSUIT_LEARNING_H_

// Two locations, two periods. Each location's escape probability is drawn
// independently as `low` or `high` with equal probability; after an escape
// both players choose between returning to the same location (rs) or
// switching (rd). All payoffs are unconditional searcher win probabilities,
// i.e. they include the factor 1/2 for meeting in the first period.

#include <array>
#include <optional>

#include "search_pursuit/matrix.h"
#include "search_pursuit/rational.h"

namespace search_pursuit {

struct LearningSpec {
  Rational low;   // escape probability l
  Rational high;  // escape probability h
  Rational prior = Rational(1, 2);  // P(escape parameter is high); only 1/2

  // Throws std::invalid_argument unless 0 <= l <= h <= 1 and prior == 1/2.
  void Validate() const;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

// Strategy order is (rs, rd) for both players.
Matrix2 BuildLearningMatrix(const LearningSpec& spec);
Matrix ToMatrix(const Matrix2& m);

// P_x(rs,rs) = (1/2)((1-x) + x(1-x)).
Rational SameLocationPayoff(const Rational& escape);

struct PerStatePayoffs {
  Rational rs_low;   // P_l(rs,rs)
  Rational rs_high;  // P_h(rs,rs)
  Rational rd_hh;
  Rational rd_ll;
  Rational rd_lh;
  Rational rd_hl;
};
PerStatePayoffs ComputePerStatePayoffs(const LearningSpec& spec);

struct LearningSolution {
  Matrix2 matrix_a;
  // Y = 8A - (4 - 2h - 2l) J is diagonal with these entries.
  Rational diag_a;  // -2h^2 + 2h - 2l^2 + 2l
  Rational diag_b;  // 2h + 2l - (h+l)^2
  Rational value_a;
  std::optional<Rational> value_y;  // unset when a or b is zero
  Rational prob_rs;
  Rational prob_rd;
  bool diagonal_shortcut = true;
  Rational lp_value;                         // direct LP on A
  std::optional<Rational> closed_form_value;  // the expanded V(A) formula
};

// Solves via the diagonal reduction, then checks the result against the
// direct LP and the closed-form V(A); throws std::logic_error on a mismatch.
// With a zero diagonal entry the LP solution is used instead.
LearningSolution SolveLearning(const LearningSpec& spec);

struct PosteriorResult {
  Rational prob_high_given_escape;  // h / (l + h)
  Rational expected_escape_next;    // (l^2 + h^2) / (l + h)
  Rational implied_capture_x;  // capture probability at the escape location
                               // implied by the equilibrium mix
  Rational q_low_capture;      // posterior that capture probability is 1 - h
};

// Throws std::invalid_argument when l + h = 0 (no escape can happen).
PosteriorResult PosteriorAfterEscape(const LearningSpec& spec,
                                     const LearningSolution& solution);

// After an escape, do both players return to the same location with
// probability above 1/2? Decided by the sign of a - b = -(h - l)^2.
bool PrefersSameLocation(const LearningSpec& spec);

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_LEARNING_H_
