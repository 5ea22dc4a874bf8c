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

#include "cutstrength/lattice_geometry.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cutstrength/errors.h"

namespace cutstrength {

namespace {

constexpr long kMaxBoundingBoxPoints = 20'000'000;

Rational Int(int64_t v) { return Rational(mpz_class(static_cast<long>(v))); }

void Require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace

std::string_view ToString(BodyKind kind) {
  switch (kind) {
    case BodyKind::kSplit:
      return "split";
    case BodyKind::kType1:
      return "type1";
    case BodyKind::kType2:
      return "type2";
    case BodyKind::kType3:
      return "type3";
    case BodyKind::kQuadrilateral:
      return "quadrilateral";
  }
  return "unknown";
}

std::string_view ToString(BodyClass body_class) {
  switch (body_class) {
    case BodyClass::kSplit:
      return "Split";
    case BodyClass::kType1Triangle:
      return "Type1Triangle";
    case BodyClass::kType2Triangle:
      return "Type2Triangle";
    case BodyClass::kType3Triangle:
      return "Type3Triangle";
    case BodyClass::kQuadrilateral:
      return "Quadrilateral";
    case BodyClass::kNotMaximalLatticeFree:
      return "NotMaximalLatticeFree";
  }
  return "unknown";
}

BodyClass ClassOf(BodyKind kind) {
  switch (kind) {
    case BodyKind::kSplit:
      return BodyClass::kSplit;
    case BodyKind::kType1:
      return BodyClass::kType1Triangle;
    case BodyKind::kType2:
      return BodyClass::kType2Triangle;
    case BodyKind::kType3:
      return BodyClass::kType3Triangle;
    case BodyKind::kQuadrilateral:
      return BodyClass::kQuadrilateral;
  }
  return BodyClass::kNotMaximalLatticeFree;
}

// ---------------------------------------------------------------------------
// UnimodularMap

UnimodularMap::UnimodularMap(int64_t m11, int64_t m12, int64_t m21,
                             int64_t m22, int64_t t1, int64_t t2)
    : m11_(m11), m12_(m12), m21_(m21), m22_(m22), t1_(t1), t2_(t2) {
  const int64_t det = Determinant();
  if (det != 1 && det != -1) {
    throw ValidationError("matrix determinant " + std::to_string(det) +
                          " is not +-1");
  }
}

Rational2 UnimodularMap::Apply(const Rational2& x) const {
  return {Int(m11_) * x.x1 + Int(m12_) * x.x2 + Int(t1_),
          Int(m21_) * x.x1 + Int(m22_) * x.x2 + Int(t2_)};
}

UnimodularMap UnimodularMap::Inverse() const {
  const int64_t det = Determinant();
  const int64_t i11 = m22_ * det, i12 = -m12_ * det;
  const int64_t i21 = -m21_ * det, i22 = m11_ * det;
  return UnimodularMap(i11, i12, i21, i22, -(i11 * t1_ + i12 * t2_),
                       -(i21 * t1_ + i22 * t2_));
}

UnimodularMap UnimodularMap::Compose(const UnimodularMap& o) const {
  return UnimodularMap(m11_ * o.m11_ + m12_ * o.m21_,
                       m11_ * o.m12_ + m12_ * o.m22_,
                       m21_ * o.m11_ + m22_ * o.m21_,
                       m21_ * o.m12_ + m22_ * o.m22_,
                       m11_ * o.t1_ + m12_ * o.t2_ + t1_,
                       m21_ * o.t1_ + m22_ * o.t2_ + t2_);
}

// ---------------------------------------------------------------------------
// LatticeFreeBody

LatticeFreeBody::LatticeFreeBody(BodyKind kind, Params params,
                                 std::vector<Rational2> corners, Polygon ccw)
    : kind_(kind),
      params_(std::move(params)),
      vertices_(std::move(corners)),
      boundary_(std::move(ccw)),
      half_planes_(EdgeHalfPlanes(boundary_)) {}

LatticeFreeBody::LatticeFreeBody(SplitParams params)
    : kind_(BodyKind::kSplit), params_(params) {
  const Rational2 n = ToRational2(params.normal);
  half_planes_.push_back({n, Int(params.offset) + 1});
  half_planes_.push_back({Rational2(-n.x1, -n.x2), -Int(params.offset)});
}

LatticeFreeBody LatticeFreeBody::Split(IntVec2 normal, int64_t offset) {
  Require(normal.x1 != 0 || normal.x2 != 0, "split normal must be nonzero");
  Require(std::gcd(normal.x1, normal.x2) == 1,
          "split normal must be primitive (coprime entries)");
  return LatticeFreeBody(SplitParams{normal, offset});
}

LatticeFreeBody LatticeFreeBody::Type1() {
  std::vector<Rational2> corners = {{0, 0}, {2, 0}, {0, 2}};
  Polygon ccw = corners;
  return LatticeFreeBody(BodyKind::kType1, Type1Params{}, std::move(corners),
                         std::move(ccw));
}

LatticeFreeBody LatticeFreeBody::Type2(const Rational& a1,
                                       const Rational& a2) {
  Require(0 < a1 && a1 < 1, "type2 requires 0 < a1 < 1");
  Require(a2 > 1, "type2 requires a2 > 1");
  Type2Params p{a1, a2, -a1 / (a2 - 1), (a2 - a1) / (a2 - 1)};
  std::vector<Rational2> corners = {
      {p.left_base, 0}, {p.right_base, 0}, {a1, a2}};
  Polygon ccw = corners;
  return LatticeFreeBody(BodyKind::kType2, std::move(p), std::move(corners),
                         std::move(ccw));
}

LatticeFreeBody LatticeFreeBody::Type3(const Rational& a1, const Rational& a2,
                                       const Rational& b1) {
  Require(a1 > 1, "type3 requires a1 > 1");
  Require(0 < a2 && a2 < 1, "type3 requires 0 < a2 < 1");
  Require(0 < b1 && b1 < 1, "type3 requires 0 < b1 < 1");
  Type3Params p;
  p.a1 = a1;
  p.a2 = a2;
  p.b1 = b1;
  p.b2 = -a2 * (1 - b1) / (a1 - 1);
  Require(b1 + p.b2 < 0,
          "type3 requires b1 + b2 < 0, i.e. b1 < a2/(a1+a2-1)");
  const Rational denom = (a1 - 1) * (1 - a2) * b1 - a1 * a2 * (1 - b1);
  p.c1 = a1 * (a1 - 1) * b1 / denom;
  p.c2 = -a1 * a2 * (1 - b1) / denom;
  Require(p.c1 < 0 && p.c2 > 1 && 0 < p.c1 + p.c2 && p.c1 + p.c2 < 1,
          "type3 derived vertex c violates c1 < 0, c2 > 1, 0 < c1+c2 < 1");
  const Rational w_vertical = p.c2 - p.b2;
  const Rational w_horizontal = a1 - p.c1;
  const Rational w_diagonal = a1 + a2 - (b1 + p.b2);
  Require(w_vertical <= w_horizontal && w_vertical <= w_diagonal,
          "type3 requires c2-b2 to attain the lattice width "
          "(c2-b2 <= a1-c1 and c2-b2 <= a1+a2-(b1+b2))");
  p.secondary_width_ordering = w_horizontal <= w_diagonal;
  std::vector<Rational2> corners = {{a1, a2}, {b1, p.b2}, {p.c1, p.c2}};
  Polygon ccw = {corners[0], corners[2], corners[1]};
  return LatticeFreeBody(BodyKind::kType3, std::move(p), std::move(corners),
                         std::move(ccw));
}

LatticeFreeBody LatticeFreeBody::Quadrilateral(const Rational& a1,
                                               const Rational& a2,
                                               const Rational& b1,
                                               const Rational& b2) {
  Require(0 < a1 && a1 <= b1 && b1 < 1,
          "quadrilateral requires 0 < a1 <= b1 < 1");
  Require(a2 > 1, "quadrilateral requires a2 > 1");
  Require(b2 < 0, "quadrilateral requires b2 < 0");
  Require(-b2 <= a2 - 1, "quadrilateral requires -b2 <= a2 - 1");
  QuadParams p;
  p.a1 = a1;
  p.a2 = a2;
  p.b1 = b1;
  p.b2 = b2;
  p.c1 = -a1 * b1 / ((a2 - 1) * b1 - a1 * b2);
  p.c2 = p.c1 * b2 / b1;
  p.d1 = ((a2 - a1) * (1 - b1) - (1 - a1) * b2) /
         ((a2 - 1) * (1 - b1) - (1 - a1) * b2);
  p.d2 = (p.d1 - 1) * b2 / (b1 - 1);
  Require(p.c1 < 0 && 0 < p.c2 && p.c2 < 1 && p.d1 > 1 && 0 < p.d2 &&
              p.d2 < 1 && p.c2 <= p.d2,
          "quadrilateral derived vertices violate c1 < 0, 0 < c2 <= d2 < 1, "
          "d1 > 1");
  Require(a2 - b2 <= p.d1 - p.c1,
          "quadrilateral requires a2-b2 <= d1-c1 (width attained by a2-b2)");
  p.theta = (a1 * b1 * (a2 - 1) * (1 - b1) - b1 * a1 * (1 - a1) * b2) /
            (b1 * (a2 - 1) * (1 - b1) - a1 * (1 - a1) * b2);
  std::vector<Rational2> corners = {{a1, a2}, {b1, b2}, {p.c1, p.c2},
                                    {p.d1, p.d2}};
  Polygon ccw = {corners[1], corners[3], corners[0], corners[2]};
  return LatticeFreeBody(BodyKind::kQuadrilateral, std::move(p),
                         std::move(corners), std::move(ccw));
}

bool LatticeFreeBody::ContainsInInterior(const Rational2& x) const {
  return std::all_of(half_planes_.begin(), half_planes_.end(),
                     [&x](const HalfPlane& h) { return sgn(h.Slack(x)) > 0; });
}

bool LatticeFreeBody::OnBoundary(const Rational2& x) const {
  bool touches = false;
  for (const HalfPlane& h : half_planes_) {
    const int s = sgn(h.Slack(x));
    if (s < 0) return false;
    if (s == 0) touches = true;
  }
  return touches;
}

// ---------------------------------------------------------------------------
// Width, area, gauge

Rational LatticeWidth(const LatticeFreeBody& body) {
  switch (body.kind()) {
    case BodyKind::kSplit:
      return 1;
    case BodyKind::kType1:
      return 2;
    case BodyKind::kType2: {
      const Rational& a2 = body.type2().a2;
      return std::min<Rational>(a2, a2 / (a2 - 1));
    }
    case BodyKind::kType3: {
      const Type3Params& p = body.type3();
      return std::min<Rational>({p.c2 - p.b2, p.a1 - p.c1,
                                 p.a1 + p.a2 - (p.b1 + p.b2)});
    }
    case BodyKind::kQuadrilateral: {
      const QuadParams& p = body.quad();
      return std::min<Rational>(p.a2 - p.b2, p.d1 - p.c1);
    }
  }
  return 0;
}

std::vector<IntVec2> PrimitiveDirections(int radius) {
  std::vector<IntVec2> dirs;
  for (int64_t x1 = 0; x1 <= radius; ++x1) {
    for (int64_t x2 = -radius; x2 <= radius; ++x2) {
      if (x1 == 0 && x2 <= 0) continue;
      if (std::gcd(x1, x2) != 1) continue;
      dirs.push_back({x1, x2});
    }
  }
  return dirs;
}

Rational LatticeWidthByEnumeration(std::span<const Rational2> vertices,
                                   int radius) {
  Require(!vertices.empty(), "lattice width needs at least one vertex");
  Require(radius >= 1, "enumeration radius must be >= 1");
  bool first = true;
  Rational best;
  for (const IntVec2& u : PrimitiveDirections(radius)) {
    Rational lo = Dot(u, vertices[0]);
    Rational hi = lo;
    for (const Rational2& v : vertices.subspan(1)) {
      const Rational d = Dot(u, v);
      if (d < lo) lo = d;
      if (d > hi) hi = d;
    }
    if (first || hi - lo < best) {
      best = hi - lo;
      first = false;
    }
  }
  return best;
}

Rational Area(const LatticeFreeBody& body) {
  Require(body.is_bounded(), "a split has unbounded area");
  return ShoelaceArea(body.boundary());
}

Rational AreaClosedForm(const LatticeFreeBody& body) {
  switch (body.kind()) {
    case BodyKind::kSplit:
      throw ValidationError("a split has unbounded area");
    case BodyKind::kType1:
      return 2;
    case BodyKind::kType2: {
      const Rational& a2 = body.type2().a2;
      return a2 * a2 / (2 * (a2 - 1));
    }
    case BodyKind::kType3: {
      const Type3Params& p = body.type3();
      return (p.a1 + p.a2 - p.b2 - p.c1) / 2;
    }
    case BodyKind::kQuadrilateral: {
      const QuadParams& p = body.quad();
      return (p.a2 - p.b2 + p.d1 - p.c1) / 2;
    }
  }
  return 0;
}

Rational Gauge(const LatticeFreeBody& body, const Rational2& f,
               const Rational2& r) {
  Require(sgn(r.x1) != 0 || sgn(r.x2) != 0, "gauge of the zero ray");
  Require(body.ContainsInInterior(f), "f is not in the interior of the body");
  Rational value = 0;
  for (const HalfPlane& h : body.half_planes()) {
    const Rational along = Dot(h.normal, r);
    if (sgn(along) <= 0) continue;
    const Rational ratio = along / h.Slack(f);
    if (ratio > value) value = ratio;
  }
  return value;
}

std::vector<Rational2> CornerRays(const LatticeFreeBody& body,
                                  const Rational2& f) {
  Require(body.is_bounded(), "a split has no corner rays");
  Require(body.ContainsInInterior(f), "f is not in the interior of the body");
  std::vector<Rational2> rays;
  rays.reserve(body.vertices().size());
  for (const Rational2& v : body.vertices()) rays.push_back(v - f);
  return rays;
}

// ---------------------------------------------------------------------------
// Classification

Polygon NormalizeConvexPolygon(std::span<const Rational2> vertices) {
  Require(vertices.size() >= 3, "a polygon needs at least three vertices");
  Polygon ccw(vertices.begin(), vertices.end());
  const int orientation = sgn(SignedArea(ccw));
  Require(orientation != 0, "degenerate polygon (zero area)");
  if (orientation < 0) std::reverse(ccw.begin(), ccw.end());
  const size_t n = ccw.size();
  for (size_t i = 0; i < n; ++i) {
    const Rational2& p = ccw[i];
    const Rational2 edge = ccw[(i + 1) % n] - p;
    for (size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      const int side = sgn(Cross(edge, ccw[j] - p));
      Require(side != 0, "degenerate polygon (collinear vertices)");
      Require(side > 0, "polygon is not convex");
    }
  }
  return ccw;
}

BodyClass Classify(std::span<const Rational2> vertices) {
  const Polygon ccw = NormalizeConvexPolygon(vertices);
  const size_t n = ccw.size();
  if (n > 4) return BodyClass::kNotMaximalLatticeFree;

  Rational lo1 = ccw[0].x1, hi1 = lo1, lo2 = ccw[0].x2, hi2 = lo2;
  for (const Rational2& v : ccw) {
    lo1 = std::min(lo1, v.x1);
    hi1 = std::max(hi1, v.x1);
    lo2 = std::min(lo2, v.x2);
    hi2 = std::max(hi2, v.x2);
  }
  const mpz_class x_begin = Ceil(lo1), x_end = Floor(hi1);
  const mpz_class y_begin = Ceil(lo2), y_end = Floor(hi2);
  const mpz_class box = (x_end - x_begin + 1) * (y_end - y_begin + 1);
  Require(box <= kMaxBoundingBoxPoints,
          "polygon bounding box holds too many lattice points");

  std::vector<int> edge_points(n, 0);  // relative interior of edge i
  std::vector<bool> integral_vertex(n, false);
  for (size_t i = 0; i < n; ++i) {
    integral_vertex[i] = IsInteger(ccw[i].x1) && IsInteger(ccw[i].x2);
  }
  for (mpz_class x = x_begin; x <= x_end; ++x) {
    for (mpz_class y = y_begin; y <= y_end; ++y) {
      const Rational2 p{Rational(x), Rational(y)};
      int zero_edge = -1;
      int zeros = 0;
      bool outside = false;
      for (size_t i = 0; i < n && !outside; ++i) {
        const int side = sgn(Cross(ccw[(i + 1) % n] - ccw[i], p - ccw[i]));
        if (side < 0) outside = true;
        if (side == 0) {
          ++zeros;
          zero_edge = static_cast<int>(i);
        }
      }
      if (outside) continue;
      if (zeros == 0) return BodyClass::kNotMaximalLatticeFree;
      if (zeros == 1) ++edge_points[zero_edge];  // zeros == 2 is a vertex
    }
  }
  if (std::any_of(edge_points.begin(), edge_points.end(),
                  [](int c) { return c == 0; })) {
    return BodyClass::kNotMaximalLatticeFree;
  }
  const auto all_one = [&] {
    return std::all_of(edge_points.begin(), edge_points.end(),
                       [](int c) { return c == 1; });
  };
  if (n == 4) {
    return all_one() ? BodyClass::kQuadrilateral
                     : BodyClass::kNotMaximalLatticeFree;
  }

  const int integral_count = static_cast<int>(
      std::count(integral_vertex.begin(), integral_vertex.end(), true));
  if (integral_count == 3 && all_one()) return BodyClass::kType1Triangle;
  if (integral_count == 0 && all_one()) return BodyClass::kType3Triangle;
  // Edge i joins vertex i and vertex i+1; vertex v is incident to edges v-1
  // and v, and edge v+1 is opposite.
  for (size_t v = 0; v < 3; ++v) {
    if (integral_vertex[v]) continue;
    const size_t before = (v + 2) % 3, after = v, opposite = (v + 1) % 3;
    const int closed_opposite = edge_points[opposite] +
                                (integral_vertex[(v + 1) % 3] ? 1 : 0) +
                                (integral_vertex[(v + 2) % 3] ? 1 : 0);
    if (edge_points[before] == 1 && edge_points[after] == 1 &&
        closed_opposite >= 2) {
      return BodyClass::kType2Triangle;
    }
  }
  return BodyClass::kNotMaximalLatticeFree;
}

namespace {

// Scales a rational direction to its primitive integer multiple; returns the
// positive scale factor used.
Rational PrimitiveScale(const Rational2& normal) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), normal.x1.get_den_mpz_t(),
          normal.x2.get_den_mpz_t());
  const mpz_class n1 = normal.x1.get_num() * (l / normal.x1.get_den());
  const mpz_class n2 = normal.x2.get_num() * (l / normal.x2.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
  return Rational(l, g);
}

}  // namespace

BodyClass Classify(const Band& band) {
  Require(sgn(band.normal.x1) != 0 || sgn(band.normal.x2) != 0,
          "band normal must be nonzero");
  Require(band.lo < band.hi, "degenerate band (lo >= hi)");
  const Rational k = PrimitiveScale(band.normal);
  const Rational lo = band.lo * k, hi = band.hi * k;
  if (IsInteger(lo) && IsInteger(hi) && hi - lo == 1) return BodyClass::kSplit;
  return BodyClass::kNotMaximalLatticeFree;
}

CanonicalForm Canonicalize(const Band& band) {
  Require(Classify(band) == BodyClass::kSplit,
          "band is not a maximal lattice-free split");
  const Rational k = PrimitiveScale(band.normal);
  const int64_t p1 = ToInt64(Rational(band.normal.x1 * k).get_num());
  const int64_t p2 = ToInt64(Rational(band.normal.x2 * k).get_num());
  const int64_t lo = ToInt64(Rational(band.lo * k).get_num());
  // Complete (p1, p2) to a unimodular matrix whose second row is (p1, p2):
  // u*p1 + v*p2 = 1 gives first row (v, -u) with determinant v*p2 + u*p1.
  mpz_class g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
             mpz_class(static_cast<long>(p1)).get_mpz_t(),
             mpz_class(static_cast<long>(p2)).get_mpz_t());
  UnimodularMap map(ToInt64(v), -ToInt64(u), p1, p2, 0, -lo);
  return {LatticeFreeBody::Split({0, 1}, 0), map};
}

}  // namespace cutstrength
