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

#ifndef SEARCH_PURSUIT_RATIONAL_H_
#define SEARCH_PURSUIT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace search_pursuit {

// Every probability, time and value in the library is an exact rational.
using Rational = mpq_class;

// num/den in canonical form. Prefer this over mpq_class(num, den), which
// leaves the fraction unreduced.
inline Rational MakeRational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "num/den", an integer, or a decimal literal (".15", "-2.5", "1e-3").
// Decimals are exact: ".15" is 3/20. Throws std::invalid_argument.
Rational ParseRational(std::string_view text);

// Canonical reduced form: "6/115", "-1/2", "3", "0".
std::string ToString(const Rational& value);

// Display-only decimal rendering, rounded half away from zero.
std::string ToDecimal(const Rational& value, int digits = 6);

std::string JoinRationals(const std::vector<Rational>& values,
                          std::string_view separator = ",");

Rational Sum(const std::vector<Rational>& values);

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_RATIONAL_H_
