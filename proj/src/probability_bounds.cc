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

#include "cutstrength/probability_bounds.h"

#include <algorithm>
#include <stdexcept>

#include "cutstrength/errors.h"

namespace cutstrength {
namespace {

using Piece = PiecewiseFunction::Piece;

const Rational kHalf(1, 2);

Piece ZeroPiece() {
  return Piece{[](const Rational&) -> Rational { return Rational(0); }, "0"};
}

// 0 up to the breakpoint, then one formula.
PiecewiseFunction ZeroThen(const Rational& b, Piece piece) {
  return PiecewiseFunction({b}, {ZeroPiece(), std::move(piece)});
}

// 0, then first on (b1, b2], then second.
PiecewiseFunction ZeroThenTwo(const Rational& b1, const Rational& b2,
                              Piece first, Piece second) {
  return PiecewiseFunction({b1, b2},
                           {ZeroPiece(), std::move(first), std::move(second)});
}

void RequireZ(const Rational& z) {
  if (z <= 1) throw ValidationError("z must be > 1, got " + ToString(z));
}

void RequireWidth(const Rational& w) {
  if (w <= 1 || w > 2) {
    throw ValidationError("lattice width must satisfy 1 < w <= 2, got " +
                          ToString(w));
  }
}

Rational Sq(const Rational& x) { return x * x; }

}  // namespace

Rational PiecewiseBound::operator()(const Rational& z) const {
  Rational sum = 0;
  for (const Term& t : terms) sum += t.integral(z);
  Rational p = sum / area;
  p.canonicalize();
  return p;
}

std::vector<Rational> PiecewiseBound::TermValues(const Rational& z) const {
  std::vector<Rational> out;
  for (const Term& t : terms) out.push_back(t.integral(z));
  return out;
}

std::vector<Rational> PiecewiseBound::Breakpoints() const {
  std::vector<Rational> all;
  for (const Term& t : terms) {
    all.insert(all.end(), t.integral.breakpoints().begin(),
               t.integral.breakpoints().end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<std::pair<std::string, Rational>>
PiecewiseBound::ContinuityDefects() const {
  std::vector<std::pair<std::string, Rational>> out;
  for (const Term& t : terms) {
    for (const Rational& b : t.integral.ContinuityDefects()) {
      out.emplace_back(t.regions, b);
    }
  }
  return out;
}

PiecewiseBound T1Bound() {
  PiecewiseFunction p(
      {Rational(3, 2), Rational(2)},
      {ZeroPiece(),
       Piece{[](const Rational& z) -> Rational {
               return Rational(3, 4) * Sq((2 * z - 3) / (z - 1));
             },
             "(3/4)((2z-3)/(z-1))^2"},
       Piece{[](const Rational&) -> Rational { return Rational(1); }, "1"}},
      {Rational(2)});
  return PiecewiseBound{{{"R1+R2+R3+R4", std::move(p)}}, Rational(1)};
}

Rational PT1(const Rational& z) {
  RequireZ(z);
  return T1Bound()(z);
}

Rational G1(const Rational& z, const Rational& w) {
  return (z - w) * (2 * w * z - w - z) / (Sq(w) * Sq(z - 1));
}

Rational G2(const Rational& z, const Rational& w) {
  return (Sq(w - 1) * Sq(z - 1) - 1) / (Sq(w) * Sq(z - 1));
}

PiecewiseBound T2WidthBound(const Rational& w) {
  RequireWidth(w);
  PiecewiseBound bound;
  bound.area = 1;
  bound.terms.push_back(
      {"g1", ZeroThen(w, Piece{[w](const Rational& z) -> Rational { return G1(z, w); },
                               "(z-w)(2wz-w-z)/(w^2(z-1)^2)"})});
  bound.terms.push_back(
      {"g2", ZeroThen(w / (w - 1),
                      Piece{[w](const Rational& z) -> Rational { return G2(z, w); },
                            "((w-1)^2(z-1)^2-1)/(w^2(z-1)^2)"})});
  return bound;
}

Rational PT2Lower(const Rational& z, const Rational& w) {
  RequireZ(z);
  return T2WidthBound(w)(z);
}

PiecewiseBound T2Bound(const Type2Params& p) {
  const Rational a2 = p.a2;
  const Rational steep = a2 / (a2 - 1);
  PiecewiseBound bound;
  bound.area = Sq(a2) / (2 * (a2 - 1));
  if (a2 <= 2) {
    bound.terms.push_back(
        {"R1+R2",
         ZeroThen(a2, Piece{[a2](const Rational& z) -> Rational {
                              return (z - a2) / (z - 1);
                            },
                            "(z-a2)/(z-1)"})});
  } else {
    bound.terms.push_back(
        {"R1+R2",
         ZeroThen(steep, Piece{[a2](const Rational& z) -> Rational {
                                 return 1 - 1 / ((a2 - 1) * (z - 1));
                               },
                               "1-1/((a2-1)(z-1))"})});
  }
  bound.terms.push_back(
      {"R3+R4",
       ZeroThen(a2, Piece{[a2](const Rational& z) -> Rational {
                            return (z - a2) * (z + a2 - 2) /
                                   (2 * (a2 - 1) * Sq(z - 1));
                          },
                          "(z-a2)(z+a2-2)/(2(a2-1)(z-1)^2)"})});
  bound.terms.push_back(
      {"R5+R6",
       ZeroThen(steep, Piece{[a2](const Rational& z) -> Rational {
                               return (a2 - 1) / 2 *
                                      (1 - 1 / (Sq(a2 - 1) * Sq(z - 1)));
                             },
                             "((a2-1)/2)(1-1/((a2-1)^2(z-1)^2))"})});
  return bound;
}

std::array<Rational, 3> T2RegionIntegrals(const LatticeFreeBody& body,
                                          const Rational& z) {
  if (body.kind() != BodyKind::kType2) {
    throw ValidationError("Type2 region integrals need a Type2 body");
  }
  RequireZ(z);
  const std::vector<Rational> v = T2Bound(body.type2()).TermValues(z);
  return {v[0], v[1], v[2]};
}

PiecewiseBound QuadBound(const QuadParams& p) {
  const Rational a1 = p.a1, a2 = p.a2, b1 = p.b1, b2 = p.b2;
  const Rational c1 = p.c1, c2 = p.c2, d1 = p.d1, d2 = p.d2;
  const Rational w = a2 - b2;
  const Rational e = d1 - c1 - 1;
  const Rational k1 = (a1 * (b2 - 1) - (a2 - 1) * b1) / (a1 * b2 - (a2 - 1) * b1);
  const Rational k2 = (a2 * (1 - b1) - (1 - a1) * b2) /
                      ((a2 - 1) * (1 - b1) - (1 - a1) * b2);
  const Rational base = (w - (b1 - a1)) / (w - 1);

  Piece a1p{[=](const Rational& z) -> Rational {
              return kHalf * (-b2 / (w - 1) + b2 / (z - 1)) *
                     (base + (z - b1) / (z - 1) +
                      a1 * (z - 1 + b2) / ((a2 - 1) * (z - 1)));
            },
            "A1"};
  Piece a2p{[=](const Rational& z) -> Rational {
              return kHalf * (-b2 / (w - 1) - c2) * (base + k1) +
                     kHalf * (c2 + b2 / (z - 1)) * (z / (z - 1) + k1);
            },
            "A2"};
  Piece a3p{[=](const Rational& z) -> Rational {
              return kHalf * ((z - a2) / (z - 1) + b2 / (w - 1)) *
                     (base + (z - 1 + a1) / (z - 1) +
                      (z - a2) * (b1 - 1) / (b2 * (z - 1)));
            },
            "A3"};
  Piece a4p{[=](const Rational& z) -> Rational {
              return kHalf * ((z - a2) / (z - 1) - d2) * (z / (z - 1) + k2) +
                     kHalf * (d2 + b2 / (w - 1)) * (base + k2);
            },
            "A4"};
  Piece a5p{[=](const Rational& z) -> Rational {
              return kHalf * (-c1 / e + c1 / (z - 1)) *
                     ((a2 - 1) * (d1 - 1) / ((1 - a1) * e) +
                      (a2 - 1) * (z - 1 + c1) / ((1 - a1) * (z - 1)) + c2 / e +
                      c2 / (z - 1));
            },
            "A5"};
  Piece a6p{[=](const Rational& z) -> Rational {
              return kHalf * (-c1 / e - a1) *
                         ((a2 - 1) * (2 - a1) / (1 - a1) - a1 * b2 / b1 +
                          (c1 * (a2 - 1) + c2 * (1 - a1)) / ((1 - a1) * e)) +
                     kHalf * (a1 + c1 / (z - 1)) *
                         (a2 - 1 - a1 * b2 / b1 +
                          (a1 * c2 - c1 * (a2 - 1)) / (a1 * (z - 1)));
            },
            "A6"};
  Piece a7p{[=](const Rational& z) -> Rational {
              return kHalf * (d1 - 1) * (z - d1 + c1) / ((z - 1) * e) *
                     ((c2 * (1 - a1) + (a2 - 1) * (d1 - 1)) / ((1 - a1) * e) +
                      (a2 - 1) * (d1 - 1) / ((1 - a1) * (z - 1)) -
                      b2 * (z - d1) / (b1 * (z - 1)));
            },
            "A7"};
  Piece a8p{[=](const Rational& z) -> Rational {
              const Rational tail =
                  ((a2 - 1) * (2 - b1) - b2 * (1 - a1)) / (1 - a1);
              return kHalf * (b1 + c1 / e) *
                         ((c2 * (1 - a1) + c1 * (a2 - 1)) / ((1 - a1) * e) +
                          tail) +
                     kHalf * ((z - d1) / (z - 1) - b1) *
                         ((a2 - 1) * (z - d1) / ((a1 - 1) * (z - 1)) -
                          b2 * (d1 - 1) / ((1 - b1) * (z - 1)) + tail);
            },
            "A8"};

  PiecewiseBound bound;
  bound.area = ShoelaceArea(std::vector<Rational2>{
      {b1, b2}, {d1, d2}, {a1, a2}, {c1, c2}});
  bound.terms.push_back(
      {"R1", ZeroThenTwo(w, (c2 - b2) / c2, std::move(a1p), std::move(a2p))});
  bound.terms.push_back({"R2", ZeroThenTwo(w, (a2 - d2) / (1 - d2),
                                           std::move(a3p), std::move(a4p))});
  bound.terms.push_back({"R3", ZeroThenTwo(d1 - c1, (a1 - c1) / a1,
                                           std::move(a5p), std::move(a6p))});
  bound.terms.push_back({"R4", ZeroThenTwo(d1 - c1, (d1 - b1) / (1 - b1),
                                           std::move(a7p), std::move(a8p))});
  return bound;
}

Rational QuadLower(const LatticeFreeBody& body, const Rational& z) {
  if (body.kind() != BodyKind::kQuadrilateral) {
    throw ValidationError("quadrilateral bound needs a quadrilateral body");
  }
  RequireZ(z);
  return QuadBound(body.quad())(z);
}

namespace {

struct T3Vertices {
  Rational a1, a2, b1, b2, c1, c2;
};

PiecewiseBound T3BoundFrom(const T3Vertices& v) {
  const Rational a1 = v.a1, a2 = v.a2, b1 = v.b1, b2 = v.b2;
  const Rational c1 = v.c1, c2 = v.c2;
  const Rational w = c2 - b2;
  const Rational s = a1 + a2 - (b1 + b2) - 1;
  const Rational bs = b1 + b2;
  const Rational g = a1 + a2 - b1 - 1;
  const Rational w3 = a1 + a2 - bs;
  const Rational zz = (a1 + a2 - (c1 + c2)) / (1 - (c1 + c2));

  auto A1 = [=](const Rational& z) -> Rational {
    return kHalf * (-b2 / (w - 1) + b2 / (z - 1)) *
           (b1 / (w - 1) + b1 / (z - 1) +
            a1 / (1 - a2) * ((c2 - 1) / (w - 1) + (z - 1 + b2) / (z - 1)));
  };
  auto A2 = [=](const Rational& z) -> Rational {
    return kHalf * (-b2 / (w - 1) - a2) *
               (((1 - a2) * b1 + a1 * (c2 - 1)) / ((1 - a2) * (w - 1)) -
                (a2 * b1 - a1 * b2) / b2) +
           kHalf * (a2 + b2 / (z - 1)) *
               ((a2 * b1 - (a1 - 1) * b2) / (a2 * (z - 1)) -
                (a2 * b1 - (a1 + 1) * b2) / b2);
  };
  auto A3 = [=](const Rational& z) -> Rational {
    return kHalf * ((z - c2) / (z - 1) + b2 / (w - 1)) *
           (b1 / (w - 1) - b1 * (z - c2) / (b2 * (z - 1)) +
            a1 / (1 - a2) * ((c2 - 1) / (w - 1) + (c2 - 1) / (z - 1)));
  };
  auto A4 = [=](const Rational& z) -> Rational {
    return kHalf * (-c1 / (a1 - c1 - 1) + c1 / (z - 1)) *
           (a2 / (a1 - c1 - 1) + a2 * (z - 1 + c1) / ((a1 - 1) * (z - 1)));
  };
  auto A5 = [=](const Rational& z) -> Rational {
    return kHalf * a2 / (b1 * (a1 - 1)) * Sq((b1 * (z - 1) + c1) / (z - 1));
  };
  auto A6 = [=](const Rational& z) -> Rational {
    return kHalf * ((z - a1) / (z - 1) + c1 / (a1 - c1 - 1)) *
           (a2 / (a1 - c1 - 1) + a2 / (z - 1));
  };
  auto A7 = [=]() -> Rational { return kHalf * Sq(-b2 / s - 1); };
  auto A8 = [=]() -> Rational { return kHalf * (b1 / s + b1 / b2) * (-b2 / s - 1); };
  auto A9 = [=](const Rational& z) -> Rational {
    return kHalf * (-bs / b2 - bs / (z - 1)) * (-b2 / (z - 1) - 1);
  };
  auto A10 = [=](const Rational& z) -> Rational {
    return kHalf * Sq(b2 * (z - (a1 + a2)) / (bs * (z - 1)) - 1);
  };
  auto A11 = [=](const Rational& z) -> Rational {
    return kHalf * (-b1 * (z - (a1 + a2)) / (bs * (z - 1)) + b1 / b2) *
           (b2 * (z - (a1 + a2)) / (bs * (z - 1)) - 1);
  };
  auto A12 = [=]() -> Rational { return kHalf * (-b1 / b2 - (a1 + a2 - 1) / s) * (-b2 / s - 1); };
  auto A13 = [=]() -> Rational { return kHalf * Sq(c2 - 1); };
  auto A14 = [=]() -> Rational { return kHalf * (b1 / b2 - c1) * (c2 - 1); };
  auto A15 = [=]() -> Rational {
    return kHalf * (-(a1 + a2 - 1) / s - b1 / b2) * (-b2 / s - 1);
  };
  auto A16 = [=](const Rational& z) -> Rational {
    return kHalf * (1 - (c1 + c2) - (a1 + a2 - 1) / (z - 1)) *
           (c2 - (z - a2) / (z - 1));
  };
  auto A17 = [=](const Rational& z) -> Rational {
    return (1 - a2) / (z - 1) * (1 - (c1 + c2) - (a1 + a2 - 1) / (z - 1));
  };

  PiecewiseBound bound;
  bound.area = ShoelaceArea(std::vector<Rational2>{{a1, a2}, {c1, c2}, {b1, b2}});
  bound.terms.push_back(
      {"R1+R2",
       ZeroThenTwo(w, (a2 - b2) / a2,
                   Piece{[=](const Rational& z) -> Rational { return A1(z) + A3(z); },
                         "A1+A3"},
                   Piece{[=](const Rational& z) -> Rational { return A2(z) + A3(z); },
                         "A2+A3"})});
  bound.terms.push_back(
      {"R3+R4",
       ZeroThenTwo(a1 - c1, (b1 - c1) / b1,
                   Piece{[=](const Rational& z) -> Rational { return A4(z) + A6(z); },
                         "A4+A6"},
                   Piece{[=](const Rational& z) -> Rational {
                           return A4(z) - A5(z) + A6(z);
                         },
                         "A4-A5+A6"})});
  if (g <= 0) {
    bound.terms.push_back(
        {"R5", ZeroThenTwo(w3, 1 - b2,
                           Piece{[=](const Rational& z) -> Rational {
                                   return A7() - A8() - A9(z);
                                 },
                                 "A7-A8-A9"},
                           Piece{[=](const Rational&) -> Rational { return A7() - A8(); },
                                 "A7-A8"})});
    bound.terms.push_back(
        {"R6", ZeroThenTwo(w3, zz,
                           Piece{[=](const Rational& z) -> Rational {
                                   return A10(z) - A11(z) - A12();
                                 },
                                 "A10-A11-A12"},
                           Piece{[=](const Rational& z) -> Rational {
                                   return A13() - A14() - A15() + A16(z) +
                                          A17(z);
                                 },
                                 "A13-A14-A15+A16+A17"})});
  } else {
    bound.terms.push_back({"R5", PiecewiseFunction::Zero()});
    // The R6 region only starts to count once the level line
    // x1 + x2 = (z-a1-a2)/(z-1) passes p + (1,0), where p is the point of
    // edge bc on x2 = 1.
    const Rational p1 = b1 + (1 - b2) * (c1 - b1) / (c2 - b2);
    const Rational zp = (a1 + a2 - 1 - p1) / (-p1);
    bound.terms.push_back(
        {"R6", ZeroThenTwo(zp, zz,
                           Piece{[=](const Rational& z) -> Rational {
                                   return A10(z) - A11(z);
                                 },
                                 "A10-A11"},
                           Piece{[=](const Rational& z) -> Rational {
                                   return A13() - A14() + A16(z) + A17(z);
                                 },
                                 "A13-A14+A16+A17"})});
  }
  return bound;
}

}  // namespace

PiecewiseBound T3Bound(const Type3Params& p) {
  return T3BoundFrom({p.a1, p.a2, p.b1, p.b2, p.c1, p.c2});
}

PiecewiseBound T3BoundUnchecked(const Rational& a1, const Rational& a2,
                                const Rational& b1) {
  if (!(a1 > 1 && a2 > 0 && a2 < 1 && b1 > 0 && b1 < 1)) {
    throw ValidationError("need a1 > 1, 0 < a2 < 1, 0 < b1 < 1");
  }
  const Rational b2 = -a2 * (1 - b1) / (a1 - 1);
  const Rational den = (a1 - 1) * (1 - a2) * b1 - a1 * a2 * (1 - b1);
  if (sgn(den) == 0 || b1 + b2 >= 0) {
    throw ValidationError("parameters do not define a type 3 triangle");
  }
  return T3BoundFrom({a1, a2, b1, b2, a1 * (a1 - 1) * b1 / den,
                      -a1 * a2 * (1 - b1) / den});
}

Rational T3Lower(const LatticeFreeBody& body, const Rational& z) {
  if (body.kind() != BodyKind::kType3) {
    throw ValidationError("type 3 bound needs a type 3 body");
  }
  RequireZ(z);
  return T3Bound(body.type3())(z);
}

PiecewiseBound ClosedFormBound(const LatticeFreeBody& body) {
  switch (body.kind()) {
    case BodyKind::kType1:
      return T1Bound();
    case BodyKind::kType2:
      return T2Bound(body.type2());
    case BodyKind::kQuadrilateral:
      return QuadBound(body.quad());
    case BodyKind::kType3:
      return T3Bound(body.type3());
    case BodyKind::kSplit:
      break;
  }
  throw ValidationError("no probability bound for a split");
}

Rational ClosedFormLower(const LatticeFreeBody& body, const Rational& z) {
  RequireZ(z);
  return ClosedFormBound(body)(z);
}

SpecialValuesResult SpecialValuesForWidth(const Rational& w) {
  RequireWidth(w);
  SpecialValuesResult out;
  out.upper_miss_at_2 = 4 * Sq(w - 1) / Sq(w);
  if (w < Rational(3, 2)) {
    out.lower_hit_at_3_2 = (3 - 2 * w) * (4 * w - 3) / Sq(w);
  } else {
    out.lower_hit_at_3_2 = 0;
  }
  out.upper_miss_at_2.canonicalize();
  out.lower_hit_at_3_2.canonicalize();
  return out;
}

}  // namespace cutstrength
