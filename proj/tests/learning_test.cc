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

#include <gtest/gtest.h>

#include "search_pursuit/lp_solver.h"
#include "test_util.h"

namespace search_pursuit {
namespace {

using testing::Q;
using testing::Qs;

LearningSpec Spec(const char* low, const char* high) { return LearningSpec{Q(low), Q(high)}; }

// Entries rebuilt from per-state win probabilities, averaged over the four
// equally likely (location 1, location 2) escape parameter assignments.
Matrix2 MatrixFromPerState(const LearningSpec& spec) {
  const PerStatePayoffs s = ComputePerStatePayoffs(spec);
  const Rational other = 1 - (spec.low + spec.high) / 2;
  const Rational same = (s.rs_low + s.rs_high) / 2;
  const Rational mixed = other / 2;
  const Rational different = (s.rd_hh + s.rd_ll + s.rd_lh + s.rd_hl) / 4;
  return {{{same, mixed}, {mixed, different}}};
}

TEST(LearningMatrixTest, ThirdAndTwoThirds) {
  const LearningSpec spec = Spec("1/3", "2/3");
  const Matrix2 a = BuildLearningMatrix(spec);
  EXPECT_EQ(ToMatrix(a), (Matrix{Qs({"13/36", "1/4"}), Qs({"1/4", "3/8"})}));
  EXPECT_EQ(a, MatrixFromPerState(spec));
  const PerStatePayoffs s = ComputePerStatePayoffs(spec);
  EXPECT_EQ(s.rs_high, Q("5/18"));
  EXPECT_EQ(s.rs_low, Q("4/9"));
  EXPECT_EQ((s.rd_hh + s.rd_ll + s.rd_lh + s.rd_hl) / 4, Q("3/8"));
}

TEST(LearningMatrixTest, ExtremeParameters) {
  EXPECT_EQ(ToMatrix(BuildLearningMatrix(Spec("0", "0"))),
            (Matrix{Qs({"1/2", "1/2"}), Qs({"1/2", "1/2"})}));
  EXPECT_EQ(ToMatrix(BuildLearningMatrix(Spec("1", "1"))),
            (Matrix{Qs({"0", "0"}), Qs({"0", "0"})}));
  EXPECT_EQ(SameLocationPayoff(Q("0")), Q("1/2"));
  EXPECT_EQ(SameLocationPayoff(Q("1")), 0);
}

TEST(LearningMatrixTest, MatchesPerStateOnRandomPairs) {
  testing::RationalGen gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    Rational l = gen.Unit(), h = gen.Unit();
    if (l > h) std::swap(l, h);
    EXPECT_EQ(BuildLearningMatrix({l, h}), MatrixFromPerState({l, h}));
  }
}

TEST(LearningSpecTest, Validation) {
  EXPECT_THROW(Spec("2/3", "1/3").Validate(), std::invalid_argument);
  EXPECT_THROW(Spec("-1/3", "1/3").Validate(), std::invalid_argument);
  EXPECT_THROW(Spec("1/3", "4/3").Validate(), std::invalid_argument);
  LearningSpec skewed = Spec("1/3", "2/3");
  skewed.prior = Q("1/3");
  EXPECT_THROW(skewed.Validate(), std::invalid_argument);
}

TEST(SolveLearningTest, ThirdAndTwoThirds) {
  const LearningSolution s = SolveLearning(Spec("1/3", "2/3"));
  EXPECT_TRUE(s.diagonal_shortcut);
  EXPECT_EQ(s.diag_a, Q("8/9"));
  EXPECT_EQ(s.diag_b, Q("1"));
  EXPECT_EQ(*s.value_y, Q("8/17"));
  EXPECT_EQ(s.value_a, Q("21/68"));
  EXPECT_EQ(s.prob_rs, Q("9/17"));
  EXPECT_EQ(s.prob_rd, Q("8/17"));
  EXPECT_EQ(s.lp_value, Q("21/68"));
  EXPECT_EQ(*s.closed_form_value, Q("21/68"));
}

TEST(SolveLearningTest, ZeroLow) {
  const LearningSolution s = SolveLearning(Spec("0", "1/2"));
  EXPECT_EQ(s.value_a, Q("33/80"));
  EXPECT_EQ(s.prob_rs, Q("3/5"));
}

TEST(SolveLearningTest, DegenerateFallsBackToLp) {
  for (auto [l, h] : {std::pair{"0", "0"}, {"0", "1"}, {"1", "1"}}) {
    const LearningSolution s = SolveLearning(Spec(l, h));
    EXPECT_FALSE(s.diagonal_shortcut) << l << "," << h;
    EXPECT_FALSE(s.value_y.has_value());
    EXPECT_EQ(s.value_a, SolveZeroSum(ToMatrix(s.matrix_a)).value);
  }
  EXPECT_EQ(SolveLearning(Spec("0", "0")).value_a, Q("1/2"));
}

TEST(SolveLearningTest, RandomPairsAgreeWithLp) {
  testing::RationalGen gen(62);
  for (int trial = 0; trial < 150; ++trial) {
    Rational l = gen.Unit(), h = gen.Unit();
    if (l > h) std::swap(l, h);
    const LearningSolution s = SolveLearning({l, h});
    EXPECT_EQ(s.value_a, s.lp_value);
    EXPECT_EQ(s.prob_rs + s.prob_rd, 1);
    if (s.diagonal_shortcut) {
      EXPECT_EQ(s.value_a, *s.closed_form_value);
      EXPECT_EQ(PrefersSameLocation({l, h}), l != h);
      EXPECT_EQ(s.prob_rs > Q("1/2"), l != h);
      EXPECT_EQ(s.prob_rs == Q("1/2"), l == h);
    }
  }
}

TEST(PosteriorTest, ThirdAndTwoThirds) {
  const LearningSpec spec = Spec("1/3", "2/3");
  const PosteriorResult r = PosteriorAfterEscape(spec, SolveLearning(spec));
  EXPECT_EQ(r.prob_high_given_escape, Q("2/3"));
  EXPECT_EQ(r.expected_escape_next, Q("5/9"));
  EXPECT_EQ(r.implied_capture_x, Q("4/9"));
  EXPECT_EQ(r.q_low_capture, Q("2/3"));
  // The implied x is the mean capture under the posterior.
  EXPECT_EQ(r.q_low_capture * (1 - spec.high) + (1 - r.q_low_capture) * (1 - spec.low),
            r.implied_capture_x);
}

TEST(PosteriorTest, PosteriorMatchesBayes) {
  testing::RationalGen gen(63);
  for (int trial = 0; trial < 100; ++trial) {
    Rational l = gen.Unit(), h = gen.Unit();
    if (l > h) std::swap(l, h);
    if (l == h) continue;
    const LearningSpec spec{l, h};
    const LearningSolution s = SolveLearning(spec);
    if (!s.diagonal_shortcut) continue;
    const PosteriorResult r = PosteriorAfterEscape(spec, s);
    EXPECT_EQ(r.q_low_capture, r.prob_high_given_escape);
    EXPECT_EQ(r.implied_capture_x, 1 - r.expected_escape_next);
  }
}

TEST(PosteriorTest, NoEscapePossible) {
  const LearningSpec spec = Spec("0", "0");
  EXPECT_THROW(PosteriorAfterEscape(spec, SolveLearning(spec)), std::invalid_argument);
}

TEST(PreferenceTest, SignOfGap) {
  EXPECT_TRUE(PrefersSameLocation(Spec("1/3", "2/3")));
  EXPECT_FALSE(PrefersSameLocation(Spec("1/2", "1/2")));
  EXPECT_TRUE(PrefersSameLocation(Spec("0", "1")));
}

}  // namespace
}  // namespace search_pursuit
