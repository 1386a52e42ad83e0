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

#include <cctype>
#include <stdexcept>

namespace search_pursuit {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void Fail(std::string_view text, std::string_view why) {
  throw std::invalid_argument("invalid rational '" + std::string(text) +
                              "': " + std::string(why));
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// Optional sign followed by digits.
mpz_class ParseInteger(std::string_view full, std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) Fail(full, "expected an integer");
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

Rational ParseDecimal(std::string_view full, std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    mpz_class exp_value = ParseInteger(full, exp_text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 4096) {
      Fail(full, "exponent out of range");
    }
    exponent = exp_value.get_si();
  }
  std::string_view whole = s;
  std::string_view fraction;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    fraction = s.substr(dot + 1);
  }
  if (whole.empty() && fraction.empty()) Fail(full, "no digits");
  if (!whole.empty() && !AllDigits(whole)) Fail(full, "bad integer part");
  if (!fraction.empty() && !AllDigits(fraction)) Fail(full, "bad fraction");

  mpz_class digits(std::string(whole) + std::string(fraction), 10);
  exponent -= static_cast<long>(fraction.size());
  Rational result(digits);
  if (exponent >= 0) {
    result *= PowerOfTen(static_cast<unsigned long>(exponent));
  } else {
    result /= PowerOfTen(static_cast<unsigned long>(-exponent));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Fail(text, "empty");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text, s.substr(0, slash));
    std::string_view den_text = s.substr(slash + 1);
    if (!AllDigits(den_text)) Fail(text, "denominator must be a positive integer");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) Fail(text, "zero denominator");
    Rational result(num, den);
    result.canonicalize();
    return result;
  }
  return ParseDecimal(text, s);
}

std::string ToString(const Rational& value) {
  Rational copy(value);
  copy.canonicalize();
  return copy.get_str();
}

std::string ToDecimal(const Rational& value, int digits) {
  mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();
  mpz_class scaled = num * PowerOfTen(static_cast<unsigned long>(digits));
  mpz_class rounded = (2 * scaled + den) / (2 * den);
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = sgn(value) < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

std::string JoinRationals(const std::vector<Rational>& values,
                          std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += ToString(values[i]);
  }
  return out;
}

Rational Sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace search_pursuit
