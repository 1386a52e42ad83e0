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

#include "search_pursuit/learning.h"

#include <stdexcept>

#include "search_pursuit/lp_solver.h"

namespace search_pursuit {
namespace {

struct Diagonal2 {
  Rational a;
  Rational b;
};

Diagonal2 DiagonalOfY(const LearningSpec& spec) {
  const Rational& l = spec.low;
  const Rational& h = spec.high;
  const Rational s = l + h;
  return {-2 * h * h + 2 * h - 2 * l * l + 2 * l, 2 * s - s * s};
}

}  // namespace

void LearningSpec::Validate() const {
  if (sgn(low) < 0 || low > high || high > 1) {
    throw std::invalid_argument("escape probabilities need 0 <= low <= high <= 1");
  }
  if (prior != Rational(1, 2)) {
    throw std::invalid_argument("only the symmetric prior 1/2 is supported");
  }
}

Rational SameLocationPayoff(const Rational& escape) {
  return Rational(1, 2) * ((1 - escape) + escape * (1 - escape));
}

PerStatePayoffs ComputePerStatePayoffs(const LearningSpec& spec) {
  spec.Validate();
  const Rational& l = spec.low;
  const Rational& h = spec.high;
  PerStatePayoffs out;
  out.rs_low = SameLocationPayoff(l);
  out.rs_high = SameLocationPayoff(h);
  out.rd_hh = out.rs_high;
  out.rd_ll = out.rs_low;
  out.rd_lh = Rational(1, 2) * ((1 - l) + l * (1 - h));
  out.rd_hl = Rational(1, 2) * ((1 - h) + h * (1 - l));
  return out;
}

Matrix2 BuildLearningMatrix(const LearningSpec& spec) {
  spec.Validate();
  const Rational& l = spec.low;
  const Rational& h = spec.high;
  const Rational s = l + h;
  const Rational same = (2 - h * h - l * l) / 4;
  const Rational mixed = (2 - s) / 4;
  const Rational different = (4 - s * s) / 8;
  return {{{same, mixed}, {mixed, different}}};
}

Matrix ToMatrix(const Matrix2& m) {
  return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
}

LearningSolution SolveLearning(const LearningSpec& spec) {
  spec.Validate();
  const Rational& l = spec.low;
  const Rational& h = spec.high;

  LearningSolution out;
  out.matrix_a = BuildLearningMatrix(spec);
  const Diagonal2 y = DiagonalOfY(spec);
  out.diag_a = y.a;
  out.diag_b = y.b;

  const MixedSolution lp = SolveZeroSum(ToMatrix(out.matrix_a));
  out.lp_value = lp.value;

  if (sgn(y.a) <= 0 || sgn(y.b) <= 0) {
    out.diagonal_shortcut = false;
    out.value_a = lp.value;
    out.prob_rs = lp.row_strategy[0];
    out.prob_rd = lp.row_strategy[1];
    return out;
  }

  const MixedSolution diag = SolveDiagonal({y.a, y.b});
  out.value_y = diag.value;
  out.prob_rs = diag.row_strategy[0];
  out.prob_rd = diag.row_strategy[1];
  out.value_a = (diag.value + 4 - 2 * h - 2 * l) / 8;

  const Rational s = l + h;
  out.closed_form_value =
      Rational(1, 2) - l / 4 - h / 4 -
      1 / (8 * (1 / (2 * h * h - 2 * h + 2 * l * l - 2 * l) - 1 / (2 * s - s * s)));

  if (out.value_a != out.lp_value || out.value_a != *out.closed_form_value) {
    throw std::logic_error("learning game: diagonal, LP and closed-form values differ");
  }
  return out;
}

PosteriorResult PosteriorAfterEscape(const LearningSpec& spec,
                                     const LearningSolution& solution) {
  spec.Validate();
  const Rational& l = spec.low;
  const Rational& h = spec.high;
  const Rational s = l + h;
  if (s == 0) {
    throw std::invalid_argument("no escape is possible when low = high = 0");
  }

  PosteriorResult out;
  out.prob_high_given_escape = h / s;
  out.expected_escape_next = (l * l + h * h) / s;

  // The unchanged location keeps mean capture 1 - s/2. Equilibrium play of
  // the diagonal game [[x, 0], [0, 1 - s/2]] requires prob_rs x = prob_rd (1 - s/2).
  const Rational other_capture = 1 - s / 2;
  if (solution.diagonal_shortcut && sgn(solution.prob_rs) > 0) {
    out.implied_capture_x = solution.prob_rd * other_capture / solution.prob_rs;
  } else {
    // Degenerate diagonal: the mix is not pinned down, use the ratio
    // prob_rd / prob_rs = a / b directly, which gives x = a / (2s).
    out.implied_capture_x = DiagonalOfY(spec).a / (2 * s);
  }

  // q (1 - h) + (1 - q)(1 - l) = x. For l = h any q fits; report the prior.
  if (l == h) {
    out.q_low_capture = spec.prior;
  } else {
    out.q_low_capture = (1 - l - out.implied_capture_x) / (h - l);
  }
  return out;
}

bool PrefersSameLocation(const LearningSpec& spec) {
  spec.Validate();
  const Diagonal2 y = DiagonalOfY(spec);
  const Rational gap = y.a - y.b;
  const Rational spread = spec.high - spec.low;
  if (gap != -(spread * spread)) {
    throw std::logic_error("diagonal gap identity failed");
  }
  // prob_rs = b / (a + b) exceeds 1/2 exactly when a < b.
  return sgn(gap) < 0;
}

}  // namespace search_pursuit
