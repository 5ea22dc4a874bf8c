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

#ifndef CUTSTRENGTH_RATIONAL_H_
#define CUTSTRENGTH_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cutstrength {

// Arbitrary precision rational. Always kept in canonical form.
using Rational = mpq_class;

// Accepts "p/q", "p", with an optional leading sign. Decimal notation is
// rejected so that every parameter stays exact. Throws ValidationError.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& q);

bool IsInteger(const Rational& q);
mpz_class Floor(const Rational& q);
mpz_class Ceil(const Rational& q);

// Narrowing helper; throws ValidationError when |v| does not fit.
int64_t ToInt64(const mpz_class& v);

// Exact 2-vector of rationals.
struct Rational2 {
  Rational x1;
  Rational x2;

  Rational2() = default;
  Rational2(Rational a, Rational b) : x1(std::move(a)), x2(std::move(b)) {}

  friend bool operator==(const Rational2& a, const Rational2& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
  // Lexicographic; used for canonical vertex-set comparison.
  friend bool operator<(const Rational2& a, const Rational2& b) {
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.x2 < b.x2;
  }
  friend Rational2 operator+(const Rational2& a, const Rational2& b) {
    return {a.x1 + b.x1, a.x2 + b.x2};
  }
  friend Rational2 operator-(const Rational2& a, const Rational2& b) {
    return {a.x1 - b.x1, a.x2 - b.x2};
  }
  friend Rational2 operator*(const Rational& s, const Rational2& a) {
    return {s * a.x1, s * a.x2};
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational2& a) {
    return os << "(" << ToString(a.x1) << ", " << ToString(a.x2) << ")";
  }
};

inline Rational Dot(const Rational2& a, const Rational2& b) {
  return a.x1 * b.x1 + a.x2 * b.x2;
}

// z-component of the planar cross product.
inline Rational Cross(const Rational2& a, const Rational2& b) {
  return a.x1 * b.x2 - a.x2 * b.x1;
}

// Integer 2-vector; split normals and lattice directions.
struct IntVec2 {
  int64_t x1 = 0;
  int64_t x2 = 0;

  friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntVec2& v) {
    return os << "(" << v.x1 << ", " << v.x2 << ")";
  }
};

inline Rational Dot(const IntVec2& u, const Rational2& x) {
  return Rational(mpz_class(static_cast<long>(u.x1))) * x.x1 +
         Rational(mpz_class(static_cast<long>(u.x2))) * x.x2;
}

inline Rational2 ToRational2(const IntVec2& v) {
  return {Rational(mpz_class(static_cast<long>(v.x1))),
          Rational(mpz_class(static_cast<long>(v.x2)))};
}

}  // namespace cutstrength

#endif  // CUTSTRENGTH_RATIONAL_H_
