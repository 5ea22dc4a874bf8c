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

#ifndef CUTSTRENGTH_LATTICE_GEOMETRY_H_
#define CUTSTRENGTH_LATTICE_GEOMETRY_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cutstrength/polygon.h"
#include "cutstrength/rational.h"

namespace cutstrength {

enum class BodyKind { kSplit, kType1, kType2, kType3, kQuadrilateral };

// Categories of planar maximal lattice-free convex sets.
enum class BodyClass {
  kSplit,
  kType1Triangle,
  kType2Triangle,
  kType3Triangle,
  kQuadrilateral,
  kNotMaximalLatticeFree,
};

std::string_view ToString(BodyKind kind);
std::string_view ToString(BodyClass body_class);
BodyClass ClassOf(BodyKind kind);

// x -> M x + t with integral M, |det M| = 1, and integral t.
class UnimodularMap {
 public:
  UnimodularMap() = default;  // Identity.
  // Throws ValidationError unless |m11*m22 - m12*m21| == 1.
  UnimodularMap(int64_t m11, int64_t m12, int64_t m21, int64_t m22,
                int64_t t1 = 0, int64_t t2 = 0);

  static UnimodularMap Identity() { return UnimodularMap(); }

  Rational2 Apply(const Rational2& x) const;
  UnimodularMap Inverse() const;
  // (this o other)(x) = this(other(x)).
  UnimodularMap Compose(const UnimodularMap& other) const;
  int64_t Determinant() const { return m11_ * m22_ - m12_ * m21_; }

  int64_t m11() const { return m11_; }
  int64_t m12() const { return m12_; }
  int64_t m21() const { return m21_; }
  int64_t m22() const { return m22_; }
  int64_t t1() const { return t1_; }
  int64_t t2() const { return t2_; }

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  int64_t m11_ = 1, m12_ = 0, m21_ = 0, m22_ = 1;
  int64_t t1_ = 0, t2_ = 0;
};

// {offset <= normal . x <= offset + 1}, normal primitive.
struct SplitParams {
  IntVec2 normal;
  int64_t offset = 0;
};

// conv{(0,0), (2,0), (0,2)}.
struct Type1Params {};

// Apex a = (a1, a2) with 0 < a1 < 1 < a2; base on x2 = 0 through (0,0) and
// (1,0); the two slanted edges pass through (0,1) and (1,1).
struct Type2Params {
  Rational a1, a2;
  Rational left_base;   // -a1/(a2-1)
  Rational right_base;  // (a2-a1)/(a2-1)
};

// Vertices a, b, c with (1,0) on ab, (0,0) on bc, (0,1) on ca.
struct Type3Params {
  Rational a1, a2, b1;
  Rational b2, c1, c2;
  // a1-c1 <= a1+a2-(b1+b2). Recorded only: the bound formulas need just
  // c2-b2 to be the minimal width, and valid bodies can violate this.
  bool secondary_width_ordering = true;
};

// Vertices a (top), b (bottom), c (left), d (right) with (0,0) on bc,
// (1,0) on bd, (0,1) on ac, and (1,1) on ad.
struct QuadParams {
  Rational a1, a2, b1, b2;
  Rational c1, c2, d1, d2;
  Rational theta;  // x1 splitting the caps into regions R3 and R4
};

// A maximal lattice-free body in canonical position. Immutable; every
// factory validates its parameters and throws ValidationError on violation.
class LatticeFreeBody {
 public:
  using Params = std::variant<SplitParams, Type1Params, Type2Params,
                              Type3Params, QuadParams>;

  static LatticeFreeBody Split(IntVec2 normal, int64_t offset);
  static LatticeFreeBody Type1();
  static LatticeFreeBody Type2(const Rational& a1, const Rational& a2);
  static LatticeFreeBody Type3(const Rational& a1, const Rational& a2,
                               const Rational& b1);
  static LatticeFreeBody Quadrilateral(const Rational& a1, const Rational& a2,
                                       const Rational& b1, const Rational& b2);

  BodyKind kind() const { return kind_; }
  bool is_bounded() const { return kind_ != BodyKind::kSplit; }
  const Params& params() const { return params_; }

  const SplitParams& split() const { return std::get<SplitParams>(params_); }
  const Type2Params& type2() const { return std::get<Type2Params>(params_); }
  const Type3Params& type3() const { return std::get<Type3Params>(params_); }
  const QuadParams& quad() const { return std::get<QuadParams>(params_); }

  // Documented corner order: Type1 (0,0),(2,0),(0,2); Type2 (left base,
  // right base, apex); Type3 (a, b, c); Quadrilateral (a, b, c, d).
  // Empty for a split.
  const std::vector<Rational2>& vertices() const { return vertices_; }
  // The same vertices in counter-clockwise boundary order.
  const Polygon& boundary() const { return boundary_; }
  const std::vector<HalfPlane>& half_planes() const { return half_planes_; }

  bool ContainsInInterior(const Rational2& x) const;
  bool OnBoundary(const Rational2& x) const;

 private:
  LatticeFreeBody(BodyKind kind, Params params, std::vector<Rational2> corners,
                  Polygon ccw);
  LatticeFreeBody(SplitParams params);

  BodyKind kind_;
  Params params_;
  std::vector<Rational2> vertices_;
  Polygon boundary_;
  std::vector<HalfPlane> half_planes_;
};

// Lattice width from the canonical closed forms (exact).
Rational LatticeWidth(const LatticeFreeBody& body);

// Brute-force lattice width of a bounded polygon over primitive directions
// with max-norm <= radius.
Rational LatticeWidthByEnumeration(std::span<const Rational2> vertices,
                                   int radius = 10);

// A band {lo <= normal . x <= hi}.
struct Band {
  Rational2 normal;
  Rational lo, hi;
};

// Counts lattice points in the interior, on edge relative interiors, and at
// vertices. Throws ValidationError for non-convex or zero-area input.
BodyClass Classify(std::span<const Rational2> vertices);
BodyClass Classify(const Band& band);

// Minkowski functional of body - f at r. Zero when r is a recession
// direction (splits only).
Rational Gauge(const LatticeFreeBody& body, const Rational2& f,
               const Rational2& r);

// vertex - f for each vertex, in the documented order of vertices().
std::vector<Rational2> CornerRays(const LatticeFreeBody& body,
                                  const Rational2& f);

Rational Area(const LatticeFreeBody& body);  // shoelace on the vertices
Rational AreaClosedForm(const LatticeFreeBody& body);

struct CanonicalForm {
  LatticeFreeBody body;
  UnimodularMap map;  // carries the input polygon onto body
};

// Searches unimodular matrices with entries in [-radius, radius], closest to
// the identity first, and lattice translations that move a boundary lattice
// point to the origin. Throws ValidationError if the input is not maximal
// lattice-free or the search is exhausted.
CanonicalForm Canonicalize(std::span<const Rational2> vertices, int radius = 10);
CanonicalForm Canonicalize(const Band& band);

// Orients to counter-clockwise and checks strict convexity. Throws
// ValidationError on degenerate or non-convex input.
Polygon NormalizeConvexPolygon(std::span<const Rational2> vertices);

// Primitive integer directions with max-norm <= radius, one of each +-u pair
// (first nonzero coordinate positive).
std::vector<IntVec2> PrimitiveDirections(int radius);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_LATTICE_GEOMETRY_H_
