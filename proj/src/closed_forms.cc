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

#include <algorithm>
#include <string>

#include "search_pursuit/lp_solver.h"
#include "search_pursuit/oracle.h"

namespace search_pursuit {
namespace {

void CheckCaptureVector(const std::vector<Rational>& capture) {
  if (capture.empty()) throw std::invalid_argument("no locations");
  for (const Rational& p : capture) {
    if (sgn(p) <= 0 || p > 1) {
      throw std::invalid_argument("capture probability " + ToString(p) +
                                  " outside (0,1]");
    }
  }
}

mpz_class Binomial(int n, int r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

}  // namespace

ConstantTimeSolution SolveConstantTimes(const std::vector<Rational>& capture,
                                        int k) {
  CheckCaptureVector(capture);
  const int n = static_cast<int>(capture.size());
  if (k < 1 || k > n) {
    throw OutsideRegimeError("constant-times closed form needs 1 <= k <= n (k=" +
                             std::to_string(k) + ", n=" + std::to_string(n) +
                             "); use the general solver");
  }

  ConstantTimeSolution out;
  for (const Rational& p : capture) out.lambda_sum += 1 / p;
  const auto weakest = std::min_element(capture.begin(), capture.end());
  const Rational interior_value = k / out.lambda_sum;

  if (interior_value <= *weakest) {
    out.regime = ConstantTimeRegime::kInterior;
    out.value = interior_value;
    for (const Rational& p : capture) out.hider.push_back(1 / (p * out.lambda_sum));
  } else {
    out.regime = ConstantTimeRegime::kCorner;
    out.value = *weakest;
    out.hider.assign(capture.size(), Rational(0));
    out.hider[static_cast<std::size_t>(weakest - capture.begin())] = 1;
  }
  return out;
}

GameSpec ArithmeticTimesGame(const std::vector<Rational>& capture) {
  const int n = static_cast<int>(capture.size());
  return GameSpec{ArithmeticTimes(n), capture, Rational(n)};
}

ArithmeticTimesSolution SolveArithmeticTimes(const std::vector<Rational>& capture,
                                             const EnumerationOptions& options) {
  CheckCaptureVector(capture);
  const GameSpec spec = ArithmeticTimesGame(capture);

  ArithmeticTimesSolution out;
  out.n = spec.num_locations();
  out.m = out.n / 2;
  out.even = out.n % 2 == 0;
  out.strictly_decreasing = true;
  for (int i = 1; i < out.n; ++i) {
    if (!(spec.capture_prob(i) > spec.capture_prob(i + 1))) {
      out.strictly_decreasing = false;
    }
  }

  // Odd n hides on m+1..n. Even n also needs location m, otherwise the
  // searcher can never cover it and the hider escapes there.
  const int first = out.even ? out.m : out.m + 1;
  for (int j = first; j <= out.n; ++j) out.s_sum += 1 / spec.capture_prob(j);
  out.value = 1 / out.s_sum;
  out.hider.assign(static_cast<std::size_t>(out.n), Rational(0));
  for (int j = first; j <= out.n; ++j) {
    const Rational weight = 1 / (spec.capture_prob(j) * out.s_sum);
    out.hider[static_cast<std::size_t>(j - 1)] = weight;
    std::vector<int> members = {j};
    if (j > out.m) {
      if (out.n - j > 0) members.push_back(out.n - j);
    } else {
      // Location m of an even game: {m, m-1, 1} uses the full budget 2m.
      if (j >= 2) members.push_back(j - 1);
      if (j >= 3) members.push_back(1);
    }
    out.searcher.push_back({SearchSet(std::move(members), spec), weight});
  }

  const PayoffMatrix matrix = BuildMatrix(spec, MaximalFeasibleSets(spec, options));
  const Certificate cert = VerifyEquilibrium(
      matrix.entries, out.hider, RowDistribution(matrix, out.searcher), out.value);
  out.verified = cert.ok;
  return out;
}

ThresholdCheckResult CheckLastLocationThreshold(const GameSpec& spec,
                                                const EnumerationOptions& options) {
  spec.Validate();
  const int n = spec.num_locations();
  for (int i = 1; i <= n; ++i) {
    if (spec.time(i) != i) {
      throw std::invalid_argument("threshold check needs search times t_i = i");
    }
  }
  if (spec.budget < n) {
    throw OutsideRegimeError(
        "budget below n: the hider escapes at location n, so the value is "
        "below p_n");
  }

  ThresholdCheckResult out;
  if (n == 1) {
    out.holds = true;
    return out;
  }
  GameSpec reduced;
  reduced.times = ArithmeticTimes(n - 1);
  reduced.capture.assign(spec.capture.begin(), spec.capture.end() - 1);
  reduced.budget = spec.budget - n;
  out.reduced_value = SolveGame(reduced, options).solution.value;
  out.holds = *out.reduced_value >= spec.capture_prob(n);
  return out;
}

void TwoTypeSpec::Validate() const {
  if (a < 1 || b < 1) throw std::invalid_argument("two-type game needs a, b >= 1");
  if (tau < 1) throw std::invalid_argument("tau must be a positive integer");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  for (const Rational* x : {&p, &q}) {
    if (sgn(*x) <= 0 || *x > 1) {
      throw std::invalid_argument("capture probability " + ToString(*x) +
                                  " outside (0,1]");
    }
  }
}

Rational TwoTypePayoff(const TwoTypeSpec& spec, int j, const Rational& y) {
  return y * spec.p * (spec.k - spec.tau * j) / spec.a +
         (1 - y) * spec.q * j / spec.b;
}

TwoTypeSolution SolveTwoType(const TwoTypeSpec& spec) {
  spec.Validate();
  if (spec.a < spec.k || spec.b * spec.tau < spec.k) {
    throw OutsideRegimeError(
        "outside the two-type closed-form regime (needs a >= k and b*tau >= k); "
        "use the general solver");
  }

  TwoTypeSolution out;
  const Rational aq = spec.a * spec.q;
  const Rational bp_tau = spec.b * spec.p * spec.tau;
  out.m = spec.k / spec.tau;
  out.y_bar = aq / (aq + bp_tau);
  out.j_hat = spec.p * spec.b * spec.k / (bp_tau + aq);
  out.value = spec.p * spec.q * spec.k / (aq + bp_tau);
  if (out.j_hat > out.m) {
    throw OutsideRegimeError(
        "outside the two-type closed-form regime: the equalizing mean " +
        ToString(out.j_hat) + " exceeds m = floor(k/tau) = " +
        std::to_string(out.m) + "; use the general solver");
  }

  out.searcher_mix.assign(static_cast<std::size_t>(out.m) + 1, Rational(0));
  mpz_class floor_j = out.j_hat.get_num() / out.j_hat.get_den();
  const auto lower = static_cast<std::size_t>(floor_j.get_ui());
  const Rational frac = out.j_hat - floor_j;
  if (frac == 0) {
    out.searcher_mix[lower] = 1;
  } else {
    out.searcher_mix[lower] = 1 - frac;
    out.searcher_mix[lower + 1] = frac;
  }
  return out;
}

GameSpec ExpandTwoType(const TwoTypeSpec& spec) {
  spec.Validate();
  GameSpec out;
  for (int i = 0; i < spec.a; ++i) {
    out.times.emplace_back(1);
    out.capture.push_back(spec.p);
  }
  for (int i = 0; i < spec.b; ++i) {
    out.times.emplace_back(spec.tau);
    out.capture.push_back(spec.q);
  }
  out.budget = spec.k;
  return out;
}

std::vector<Rational> ExpandTwoTypeHider(const TwoTypeSpec& spec,
                                         const TwoTypeSolution& solution) {
  std::vector<Rational> h;
  for (int i = 0; i < spec.a; ++i) h.push_back(solution.y_bar / spec.a);
  for (int i = 0; i < spec.b; ++i) h.push_back((1 - solution.y_bar) / spec.b);
  return h;
}

std::vector<WeightedSet> ExpandTwoTypeSearcher(const TwoTypeSpec& spec,
                                               const TwoTypeSolution& solution,
                                               const EnumerationOptions& options) {
  const GameSpec game = ExpandTwoType(spec);
  std::vector<WeightedSet> out;
  for (SearchSet& set : MaximalFeasibleSets(game, options)) {
    const auto type2 = static_cast<int>(std::count_if(
        set.members().begin(), set.members().end(),
        [&](int loc) { return loc > spec.a; }));
    const int type1 = static_cast<int>(set.size()) - type2;
    if (type2 > solution.m || type1 != spec.k - spec.tau * type2) continue;
    const Rational& xj = solution.searcher_mix[static_cast<std::size_t>(type2)];
    if (xj == 0) continue;
    const Rational count(Binomial(spec.a, type1) * Binomial(spec.b, type2));
    out.push_back({std::move(set), xj / count});
  }
  return out;
}

}  // namespace search_pursuit
