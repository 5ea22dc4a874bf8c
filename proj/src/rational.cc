// Copyright 2026 The cutstrength Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cutstrength/rational.h"

#include <cctype>
#include <limits>
#include <string>

#include "cutstrength/errors.h"

namespace cutstrength {

namespace {

bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string StripPlus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsSignedDigits(num) || !IsSignedDigits(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ValidationError("malformed rational '" + std::string(text) +
                          "' (expected p/q or an integer)");
  }
  const mpz_class d(StripPlus(den));
  if (d == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(mpz_class(StripPlus(num)), d);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& q) { return q.get_str(); }

bool IsInteger(const Rational& q) { return q.get_den() == 1; }

mpz_class Floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class Ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int64_t ToInt64(const mpz_class& v) {
  if (!v.fits_slong_p()) {
    throw ValidationError("integer " + v.get_str() + " exceeds 64 bits");
  }
  return static_cast<int64_t>(v.get_si());
}

}  // namespace cutstrength
