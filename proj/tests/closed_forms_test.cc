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

#include "search_pursuit/closed_forms.h"

#include <gtest/gtest.h>

#include "search_pursuit/lp_solver.h"
#include "search_pursuit/oracle.h"
#include "test_util.h"

namespace search_pursuit {
namespace {

using testing::Q;
using testing::Qs;

GameSpec UnitTimeGame(const std::vector<Rational>& capture, int k) {
  return GameSpec{std::vector<Rational>(capture.size(), Rational(1)), capture, Rational(k)};
}

TEST(ConstantTimesTest, InteriorRegime) {
  const ConstantTimeSolution s = SolveConstantTimes(Qs({".2", ".3", ".5"}), 1);
  EXPECT_EQ(s.regime, ConstantTimeRegime::kInterior);
  EXPECT_EQ(s.lambda_sum, Q("31/3"));
  EXPECT_EQ(s.value, Q("3/31"));
  EXPECT_EQ(s.hider, Qs({"15/31", "10/31", "6/31"}));
  EXPECT_EQ(SolveGame(UnitTimeGame(Qs({".2", ".3", ".5"}), 1)).solution.value, Q("3/31"));
}

TEST(ConstantTimesTest, CornerRegime) {
  const ConstantTimeSolution s = SolveConstantTimes(Qs({".3", ".2", ".5"}), 3);
  EXPECT_EQ(s.regime, ConstantTimeRegime::kCorner);
  EXPECT_EQ(s.value, Q("1/5"));
  EXPECT_EQ(s.hider, Qs({"0", "1", "0"}));
  EXPECT_EQ(SolveGame(UnitTimeGame(Qs({".3", ".2", ".5"}), 3)).solution.value, Q("1/5"));
}

TEST(ConstantTimesTest, BoundaryCountsAsInterior) {
  // k / Lambda = 2 / 4 = p_min.
  const ConstantTimeSolution s = SolveConstantTimes(Qs({"1/2", "1/2"}), 2);
  EXPECT_EQ(s.regime, ConstantTimeRegime::kInterior);
  EXPECT_EQ(s.value, Q("1/2"));
  EXPECT_EQ(s.hider, Qs({"1/2", "1/2"}));
}

TEST(ConstantTimesTest, RejectsOutOfRange) {
  EXPECT_THROW(SolveConstantTimes(Qs({".2", ".3"}), 0), OutsideRegimeError);
  EXPECT_THROW(SolveConstantTimes(Qs({".2", ".3"}), 3), OutsideRegimeError);
  EXPECT_THROW(SolveConstantTimes(Qs({"0", ".3"}), 1), std::invalid_argument);
  EXPECT_THROW(SolveConstantTimes({}, 1), std::invalid_argument);
}

TEST(ConstantTimesTest, MatchesLpOnRandomInstances) {
  testing::RationalGen gen(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.Int(1, 6);
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i) p.push_back(gen.Probability());
    const int k = gen.Int(1, n);
    const ConstantTimeSolution s = SolveConstantTimes(p, k);
    const GameSolution g = SolveGame(UnitTimeGame(p, k));
    EXPECT_EQ(s.value, g.solution.value);
    EXPECT_TRUE(HiderUniqueness(g.matrix.entries, s.value).ranges.size() == p.size());
    // The closed-form hider must hold every k-subset to the value.
    EXPECT_EQ(BestResponseValue(UnitTimeGame(p, k), HiderStrategy(s.hider)).value, s.value);
  }
}

TEST(ArithmeticTimesTest, OddFiveLocations) {
  const ArithmeticTimesSolution s = SolveArithmeticTimes(Qs({".5", ".4", ".3", ".2", ".1"}));
  EXPECT_EQ(s.m, 2);
  EXPECT_FALSE(s.even);
  EXPECT_TRUE(s.strictly_decreasing);
  EXPECT_EQ(s.value, Q("3/55"));
  EXPECT_EQ(s.hider, Qs({"0", "0", "2/11", "3/11", "6/11"}));
  ASSERT_EQ(s.searcher.size(), 3u);
  EXPECT_EQ(s.searcher[0].set.ToString(), "{2,3}");
  EXPECT_EQ(s.searcher[0].probability, Q("2/11"));
  EXPECT_EQ(s.searcher[1].set.ToString(), "{1,4}");
  EXPECT_EQ(s.searcher[1].probability, Q("3/11"));
  EXPECT_EQ(s.searcher[2].set.ToString(), "{5}");
  EXPECT_EQ(s.searcher[2].probability, Q("6/11"));
  EXPECT_TRUE(s.verified);
}

TEST(ArithmeticTimesTest, SingleLocation) {
  const ArithmeticTimesSolution s = SolveArithmeticTimes(Qs({"3/7"}));
  EXPECT_EQ(s.value, Q("3/7"));
  EXPECT_EQ(s.hider, Qs({"1"}));
  EXPECT_TRUE(s.verified);
}

TEST(ArithmeticTimesTest, EvenFourLocationsIncludesLocationM) {
  const auto p = Qs({".5", ".4", ".3", ".2"});
  const ArithmeticTimesSolution s = SolveArithmeticTimes(p);
  EXPECT_TRUE(s.even);
  EXPECT_EQ(s.value, Q("6/65"));
  EXPECT_EQ(s.hider, Qs({"0", "3/13", "4/13", "6/13"}));
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(SolveGame(ArithmeticTimesGame(p)).solution.value, Q("6/65"));
}

TEST(ArithmeticTimesTest, EvenSumFromMPlusOneFailsCertificate) {
  // Dropping location m: S = 1/.3 + 1/.2, hider on {3, 4}.
  const auto p = Qs({".5", ".4", ".3", ".2"});
  const GameSpec spec = ArithmeticTimesGame(p);
  const PayoffMatrix m = BuildMatrix(spec, MaximalFeasibleSets(spec));
  const std::vector<WeightedSet> searcher = {{SearchSet({1, 3}, spec), Q("2/5")},
                                             {SearchSet({4}, spec), Q("3/5")}};
  const Certificate c = VerifyEquilibrium(m.entries, Qs({"0", "0", "2/5", "3/5"}),
                                          RowDistribution(m, searcher), Q("3/25"));
  EXPECT_FALSE(c.ok);
}

TEST(ArithmeticTimesTest, VerifiedAgainstLpForDecreasingCapture) {
  testing::RationalGen gen(52);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.Int(1, 7);
    const auto p = gen.StrictlyDecreasing(n);
    const ArithmeticTimesSolution s = SolveArithmeticTimes(p);
    EXPECT_TRUE(s.verified) << "n=" << n << " p=" << JoinRationals(p);
    EXPECT_EQ(s.value, SolveGame(ArithmeticTimesGame(p)).solution.value);
  }
}

TEST(ThresholdTest, DecreasingFive) {
  const ThresholdCheckResult at10 = CheckLastLocationThreshold(testing::DecreasingFiveGame(10));
  EXPECT_TRUE(at10.holds);
  ASSERT_TRUE(at10.reduced_value.has_value());
  EXPECT_GE(*at10.reduced_value, Q(".1"));
  const ThresholdCheckResult at9 = CheckLastLocationThreshold(testing::DecreasingFiveGame(9));
  EXPECT_FALSE(at9.holds);
  EXPECT_LT(*at9.reduced_value, Q(".1"));
}

TEST(ThresholdTest, SingleLocationAndErrors) {
  const ThresholdCheckResult one = CheckLastLocationThreshold(GameSpec{{1}, Qs({".4"}), 1});
  EXPECT_TRUE(one.holds);
  EXPECT_FALSE(one.reduced_value.has_value());
  EXPECT_THROW(CheckLastLocationThreshold(testing::DecreasingFiveGame(4)), OutsideRegimeError);
  EXPECT_THROW(CheckLastLocationThreshold(testing::FourLocationGame()), std::invalid_argument);
}

TEST(ThresholdTest, AgreesWithGameValue) {
  testing::RationalGen gen(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.Int(1, 5);
    GameSpec spec{ArithmeticTimes(n), gen.StrictlyDecreasing(n), Rational(0)};
    spec.budget = gen.Int(n, n * (n + 1) / 2);
    const ThresholdCheckResult r = CheckLastLocationThreshold(spec);
    const Rational v = SolveGame(spec).solution.value;
    EXPECT_EQ(r.holds, v == spec.capture_prob(n));
  }
}

TwoTypeSpec ExampleTwoType() { return TwoTypeSpec{4, 2, 2, Q("3/10"), Q("1/5"), 4}; }

TEST(TwoTypeTest, Example) {
  const TwoTypeSolution s = SolveTwoType(ExampleTwoType());
  EXPECT_EQ(s.m, 2);
  EXPECT_EQ(s.y_bar, Q("2/5"));
  EXPECT_EQ(s.j_hat, Q("6/5"));
  EXPECT_EQ(s.value, Q("3/25"));
  EXPECT_EQ(s.searcher_mix, Qs({"0", "4/5", "1/5"}));
  EXPECT_EQ(SolveGame(ExpandTwoType(ExampleTwoType())).solution.value, Q("3/25"));
}

TEST(TwoTypeTest, PayoffIndependentOfJAtEqualizer) {
  const TwoTypeSpec spec = ExampleTwoType();
  const TwoTypeSolution s = SolveTwoType(spec);
  for (int j = 0; j <= s.m; ++j) EXPECT_EQ(TwoTypePayoff(spec, j, s.y_bar), s.value);
  // Against any y, the mean mix j_hat also gets the value.
  for (const char* y : {"0", "1/3", "1"}) {
    Rational mixed = 0;
    for (int j = 0; j <= s.m; ++j) mixed += s.searcher_mix[j] * TwoTypePayoff(spec, j, Q(y));
    EXPECT_EQ(mixed, s.value);
  }
}

TEST(TwoTypeTest, SymmetricTypes) {
  const TwoTypeSolution s = SolveTwoType(TwoTypeSpec{3, 5, 1, Q("1/4"), Q("1/4"), 2});
  EXPECT_EQ(s.y_bar, Q("3/8"));
  EXPECT_EQ(s.value, Q("1/16"));
}

TEST(TwoTypeTest, RegimeGuards) {
  // a < k: small game solved by the LP instead.
  const TwoTypeSpec small{1, 1, 3, Q("1/2"), Q("1/3"), 3};
  EXPECT_THROW(SolveTwoType(small), OutsideRegimeError);
  EXPECT_EQ(SolveGame(ExpandTwoType(small)).solution.value, Q("1/5"));  // pq/(p+q)
  // b tau < k.
  EXPECT_THROW(SolveTwoType(TwoTypeSpec{6, 1, 2, Q("1/2"), Q("1/2"), 5}), OutsideRegimeError);
  // Mean above m = floor(k/tau): a budget of one cannot reach type 2.
  TwoTypeSpec tight = ExampleTwoType();
  tight.k = 1;
  EXPECT_THROW(SolveTwoType(tight), OutsideRegimeError);
  EXPECT_EQ(SolveGame(ExpandTwoType(tight)).solution.value, 0);
  EXPECT_THROW(SolveTwoType(TwoTypeSpec{0, 1, 1, Q("1"), Q("1"), 0}), std::invalid_argument);
}

TEST(TwoTypeTest, ExpandedStrategiesCertifyOnFullGame) {
  testing::RationalGen gen(54);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    TwoTypeSpec spec{gen.Int(1, 6), gen.Int(1, 4), gen.Int(1, 3), gen.Probability(),
                     gen.Probability(), 0};
    spec.k = gen.Int(1, spec.a);
    if (spec.b * spec.tau > 12 || spec.a + spec.b > 9) continue;
    TwoTypeSolution s;
    try {
      s = SolveTwoType(spec);
    } catch (const OutsideRegimeError&) {
      continue;
    }
    ++checked;
    const GameSpec game = ExpandTwoType(spec);
    const PayoffMatrix m = BuildMatrix(game, MaximalFeasibleSets(game));
    const Certificate c = VerifyEquilibrium(m.entries, ExpandTwoTypeHider(spec, s),
                                            RowDistribution(m, ExpandTwoTypeSearcher(spec, s)),
                                            s.value);
    EXPECT_TRUE(c.ok) << "a=" << spec.a << " b=" << spec.b << " tau=" << spec.tau
                      << " k=" << spec.k;
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace search_pursuit
