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

#ifndef SEARCH_PURSUIT_SIMPLEX_H_
#define SEARCH_PURSUIT_SIMPLEX_H_

#include <vector>

#include "search_pursuit/rational.h"

namespace search_pursuit {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective . x  subject to  constraints,  x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> primal;
  // One multiplier per constraint, in the sign convention of the original
  // rows (>= 0 for binding <= rows of a maximization).
  std::vector<Rational> dual;
};

// Two-phase primal simplex over exact rationals with Bland's rule, so the
// pivot sequence and the returned vertex are deterministic.
LpResult Maximize(const LinearProgram& program);

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_SIMPLEX_H_
