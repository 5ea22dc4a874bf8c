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

#ifndef CUTSTRENGTH_TESTS_ORACLE_H_
#define CUTSTRENGTH_TESTS_ORACLE_H_

// Brute-force reference computations for tests. Nothing here calls the
// library's region, strength, or LP code.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace oracle {

using Q = mpq_class;

struct Pt {
  Q x, y;
};
using Poly = std::vector<Pt>;

// Keeps a*x + b*y <= c.
Poly ClipLe(const Poly& poly, const Q& a, const Q& b, const Q& c);
Q AreaOf(const Poly& poly);
bool InsideClosed(const Poly& poly, const Pt& p);  // any orientation

// A piece of a region on which the single-split strength is one formula:
// t = (u - param)/u ("low", u > 0) or t = (param - u)/(gamma - u) ("high",
// u < gamma), with u = p*x + q*y, or the constant param.
struct StrengthPiece {
  int region = 0;
  Poly poly;
  enum class Form { kLow, kHigh, kConstant } form = Form::kConstant;
  Q p, q, param;
  Q gamma = 1;
};

struct OracleBody {
  Poly vertices;
  std::vector<StrengthPiece> pieces;
  Q area;
};

OracleBody Type1();
OracleBody Type2(const Q& a1, const Q& a2);
// Vertex formulas evaluated independently of the library.
struct QuadVertices {
  Q c1, c2, d1, d2, theta;
};
QuadVertices QuadDerived(const Q& a1, const Q& a2, const Q& b1, const Q& b2);
OracleBody Quadrilateral(const Q& a1, const Q& a2, const Q& b1, const Q& b2);
struct T3Vertices {
  Q b2, c1, c2;
};
T3Vertices T3Derived(const Q& a1, const Q& a2, const Q& b1);
OracleBody Type3(const Q& a1, const Q& a2, const Q& b1);

// Exact area of {f : strength(f) <= z}, by clipping each piece with the
// level half-plane.
Q IndicatorArea(const OracleBody& body, const Q& z);
inline Q Probability(const OracleBody& body, const Q& z) {
  Q v = IndicatorArea(body, z) / body.area;
  v.canonicalize();
  return v;
}

// Strength at f from the first piece containing f, or nullopt.
std::optional<Q> StrengthAt(const OracleBody& body, const Pt& f);

// min sum(s) s.t. rows*s >= 1, s >= 0 by enumerating every basis of the
// full constraint system; nullopt if infeasible.
std::optional<Q> CoveringMin(const std::vector<std::vector<Q>>& rows);

// Lattice width by scanning all directions with max-norm <= radius.
Q WidthScan(const Poly& vertices, int radius);

// Lattice points of the closed bounding box strictly inside / on the
// boundary of a convex polygon.
int InteriorLatticePoints(const Poly& convex);

}  // namespace oracle

#endif  // CUTSTRENGTH_TESTS_ORACLE_H_
