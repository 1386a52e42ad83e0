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

#include <gtest/gtest.h>

#include "test_util.h"

namespace search_pursuit {
namespace {

using testing::Q;
using testing::Qs;

TEST(SimplexTest, TextbookMaximum) {
  // max 3x + 5y : x <= 4, 2y <= 12, 3x + 2y <= 18.
  LinearProgram lp;
  lp.objective = Qs({"3", "5"});
  lp.constraints = {{Qs({"1", "0"}), Relation::kLessEqual, Q("4")},
                    {Qs({"0", "2"}), Relation::kLessEqual, Q("12")},
                    {Qs({"3", "2"}), Relation::kLessEqual, Q("18")}};
  const LpResult r = Maximize(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, 36);
  EXPECT_EQ(r.primal, Qs({"2", "6"}));
  // Duals: (0, 3/2, 1) and b.y equals the primal objective.
  EXPECT_EQ(r.dual, Qs({"0", "3/2", "1"}));
}

TEST(SimplexTest, EqualityAndGreaterEqualNeedPhaseOne) {
  // max x + y : x + y = 1, x >= 1/3, y >= 1/4.
  LinearProgram lp;
  lp.objective = Qs({"-1", "0"});
  lp.constraints = {{Qs({"1", "1"}), Relation::kEqual, Q("1")},
                    {Qs({"1", "0"}), Relation::kGreaterEqual, Q("1/3")},
                    {Qs({"0", "1"}), Relation::kGreaterEqual, Q("1/4")}};
  const LpResult r = Maximize(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.primal, Qs({"1/3", "2/3"}));
  EXPECT_EQ(r.objective, Q("-1/3"));
}

TEST(SimplexTest, NegativeRightHandSide) {
  // max -x : -x <= -2  (x >= 2).
  LinearProgram lp;
  lp.objective = Qs({"-1"});
  lp.constraints = {{Qs({"-1"}), Relation::kLessEqual, Q("-2")}};
  const LpResult r = Maximize(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.primal, Qs({"2"}));
  EXPECT_EQ(r.dual, Qs({"1"}));
}

TEST(SimplexTest, Infeasible) {
  LinearProgram lp;
  lp.objective = Qs({"1"});
  lp.constraints = {{Qs({"1"}), Relation::kLessEqual, Q("1")},
                    {Qs({"1"}), Relation::kGreaterEqual, Q("2")}};
  EXPECT_EQ(Maximize(lp).status, LpStatus::kInfeasible);
}

TEST(SimplexTest, Unbounded) {
  LinearProgram lp;
  lp.objective = Qs({"1", "1"});
  lp.constraints = {{Qs({"1", "-1"}), Relation::kLessEqual, Q("1")}};
  EXPECT_EQ(Maximize(lp).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, DegenerateCycleProneProgram) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LinearProgram lp;
  lp.objective = Qs({"3/4", "-20", "1/2", "-6"});
  lp.constraints = {{Qs({"1/4", "-8", "-1", "9"}), Relation::kLessEqual, Q("0")},
                    {Qs({"1/2", "-12", "-1/2", "3"}), Relation::kLessEqual, Q("0")},
                    {Qs({"0", "0", "1", "0"}), Relation::kLessEqual, Q("1")}};
  const LpResult r = Maximize(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, Q("5/4"));
}

TEST(SimplexTest, StrongDualityOnRandomFeasiblePrograms) {
  testing::RationalGen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = gen.Int(1, 5);
    const int cols = gen.Int(1, 5);
    LinearProgram lp;
    for (int j = 0; j < cols; ++j) lp.objective.push_back(gen.Unit() - Q("1/3"));
    for (int i = 0; i < rows; ++i) {
      LinearConstraint c;
      for (int j = 0; j < cols; ++j) c.coefficients.push_back(gen.Probability());
      c.relation = Relation::kLessEqual;
      c.rhs = gen.Probability();
      lp.constraints.push_back(c);
    }
    const LpResult r = Maximize(lp);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    Rational primal_obj = 0;
    for (int j = 0; j < cols; ++j) primal_obj += lp.objective[j] * r.primal[j];
    EXPECT_EQ(primal_obj, r.objective);
    Rational dual_obj = 0;
    for (int i = 0; i < rows; ++i) {
      EXPECT_GE(r.dual[i], 0);
      dual_obj += r.dual[i] * lp.constraints[i].rhs;
      Rational lhs = 0;
      for (int j = 0; j < cols; ++j) lhs += lp.constraints[i].coefficients[j] * r.primal[j];
      EXPECT_LE(lhs, lp.constraints[i].rhs);
    }
    EXPECT_EQ(dual_obj, r.objective);
    for (int j = 0; j < cols; ++j) {
      Rational reduced = 0;
      for (int i = 0; i < rows; ++i) reduced += r.dual[i] * lp.constraints[i].coefficients[j];
      EXPECT_GE(reduced, lp.objective[j]);
    }
  }
}

}  // namespace
}  // namespace search_pursuit
