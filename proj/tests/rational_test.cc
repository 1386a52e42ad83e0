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

#include "search_pursuit/rational.h"

#include <gtest/gtest.h>

namespace search_pursuit {
namespace {

TEST(RationalTest, MakeRationalCanonicalizes) {
  EXPECT_EQ(ToString(MakeRational(6, 4)), "3/2");
  EXPECT_EQ(ToString(MakeRational(3, -6)), "-1/2");
  EXPECT_EQ(MakeRational(2, 4), MakeRational(1, 2));
}

TEST(RationalTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(ParseRational("6/115"), MakeRational(6, 115));
  EXPECT_EQ(ParseRational("12/8"), MakeRational(3, 2));
  EXPECT_EQ(ParseRational("-7"), MakeRational(-7));
  EXPECT_EQ(ParseRational("0.15"), MakeRational(3, 20));
  EXPECT_EQ(ParseRational(".1"), MakeRational(1, 10));
  EXPECT_EQ(ParseRational("1e-2"), MakeRational(1, 100));
  EXPECT_EQ(ParseRational("2.5E3"), MakeRational(2500));
  EXPECT_EQ(ParseRational("  3/4 "), MakeRational(3, 4));
}

TEST(RationalTest, DecimalIsExactNotBinary) {
  EXPECT_EQ(ParseRational("0.1") + ParseRational("0.2"), ParseRational("0.3"));
}

TEST(RationalTest, RejectsMalformed) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "1.2.3", "1/2/3", "e5", "--1", "0x10"}) {
    EXPECT_THROW(ParseRational(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, ToStringIsCanonical) {
  EXPECT_EQ(ToString(Rational(0)), "0");
  EXPECT_EQ(ToString(MakeRational(18, 185)), "18/185");
  EXPECT_EQ(ToString(MakeRational(5)), "5");
}

TEST(RationalTest, ToDecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(ToDecimal(MakeRational(6, 115)), "0.052174");
  EXPECT_EQ(ToDecimal(MakeRational(18, 185), 4), "0.0973");
  EXPECT_EQ(ToDecimal(MakeRational(1, 8), 2), "0.13");
  EXPECT_EQ(ToDecimal(MakeRational(-1, 8), 2), "-0.13");
  EXPECT_EQ(ToDecimal(MakeRational(1, 3), 0), "0");
  EXPECT_EQ(ToDecimal(MakeRational(1), 3), "1.000");
}

TEST(RationalTest, JoinAndSum) {
  const std::vector<Rational> v = {MakeRational(1, 2), MakeRational(1, 3), MakeRational(1, 6)};
  EXPECT_EQ(JoinRationals(v), "1/2,1/3,1/6");
  EXPECT_EQ(JoinRationals(v, " "), "1/2 1/3 1/6");
  EXPECT_EQ(Sum(v), 1);
  EXPECT_EQ(Sum({}), 0);
}

}  // namespace
}  // namespace search_pursuit
