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

#include "cutstrength/cut_engine.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cutstrength/errors.h"
#include "table_strength.h"

namespace cutstrength {
namespace {

Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

HalfPlane AtMost(Rational2 normal, Rational bound) {
  return HalfPlane{std::move(normal), std::move(bound)};
}

HalfPlane AtLeast(const Rational2& normal, const Rational& bound) {
  return HalfPlane{Rational2(-normal.x1, -normal.x2), -bound};
}

const Rational2 kE1(Q(1), Q(0));
const Rational2 kE2(Q(0), Q(1));
const Rational2 kSum(Q(1), Q(1));

Polygon ClipAll(Polygon p, std::initializer_list<HalfPlane> keep) {
  for (const HalfPlane& h : keep) {
    if (p.empty()) break;
    p = Clip(p, h);
  }
  return p;
}

void AddPiece(Region& region, Polygon piece) {
  if (!piece.empty()) region.pieces.push_back(std::move(piece));
}

Polygon Triangle(const Rational2& a, const Rational2& b, const Rational2& c) {
  std::vector<Rational2> v = {a, b, c};
  return NormalizeConvexPolygon(v);
}

Polygon Quadrangle(const Rational2& a, const Rational2& b, const Rational2& c,
                   const Rational2& d) {
  std::vector<Rational2> v = {a, b, c, d};
  return NormalizeConvexPolygon(v);
}

std::vector<Region> Type1Regions() {
  const Rational2 o(Q(0), Q(0)), e1(Q(1), Q(0)), e2(Q(0), Q(1)),
      e11(Q(1), Q(1)), e20(Q(2), Q(0)), e02(Q(0), Q(2));
  std::vector<Region> out(4);
  out[0].pieces = {Triangle(e1, e2, e11)};
  out[1].pieces = {Triangle(o, e1, e2)};
  out[2].pieces = {Triangle(e2, e11, e02)};
  out[3].pieces = {Triangle(e1, e11, e20)};
  return out;
}

std::vector<Region> Type2Regions(const Type2Params& p) {
  const Rational2 o(Q(0), Q(0)), e1(Q(1), Q(0)), e2(Q(0), Q(1)),
      e11(Q(1), Q(1)), a0(p.a1, Q(0)), a1(p.a1, Q(1)), apex(p.a1, p.a2),
      left(p.left_base, Q(0)), right(p.right_base, Q(0));
  std::vector<Region> out(6);
  out[0].pieces = {Quadrangle(o, a0, a1, e2)};
  out[1].pieces = {Quadrangle(a0, e1, e11, a1)};
  out[2].pieces = {Triangle(o, e2, left)};
  out[3].pieces = {Triangle(e1, e11, right)};
  out[4].pieces = {Triangle(e2, a1, apex)};
  out[5].pieces = {Triangle(a1, e11, apex)};
  return out;
}

std::vector<Region> QuadRegions(const LatticeFreeBody& body) {
  const QuadParams& p = body.quad();
  const Polygon& q = body.boundary();
  const Rational w = p.a2 - p.b2;
  const Rational h = -p.b2 / (w - 1);
  std::vector<Region> out(4);
  AddPiece(out[0], ClipAll(q, {AtLeast(kE2, Q(0)), AtMost(kE2, h)}));
  AddPiece(out[1], ClipAll(q, {AtLeast(kE2, h), AtMost(kE2, Q(1))}));
  for (Polygon cap : {Clip(q, AtMost(kE2, Q(0))), Clip(q, AtLeast(kE2, Q(1)))}) {
    if (cap.empty()) continue;
    AddPiece(out[2], Clip(cap, AtMost(kE1, p.theta)));
    AddPiece(out[3], Clip(cap, AtLeast(kE1, p.theta)));
  }
  return out;
}

std::vector<Region> Type3Regions(const LatticeFreeBody& body) {
  const Type3Params& p = body.type3();
  const Polygon& t = body.boundary();
  const Rational h1 = -p.b2 / (p.c2 - 1 - p.b2);
  const Rational h2 = -p.c1 / (p.a1 - 1 - p.c1);
  const Rational bs = p.b1 + p.b2;
  const Rational h3 = -bs / (p.a1 + p.a2 - 1 - bs);
  std::vector<Region> out(6);
  AddPiece(out[0], ClipAll(t, {AtLeast(kE2, Q(0)), AtMost(kE2, h1)}));
  AddPiece(out[1], ClipAll(t, {AtLeast(kE2, h1), AtMost(kE2, Q(1))}));
  for (Polygon cap : {Clip(t, AtMost(kE2, Q(0))), Clip(t, AtLeast(kE2, Q(1)))}) {
    if (cap.empty()) continue;
    Polygon middle = ClipAll(cap, {AtLeast(kE1, Q(0)), AtMost(kE1, Q(1))});
    if (!middle.empty()) {
      AddPiece(out[2], Clip(middle, AtMost(kE1, h2)));
      AddPiece(out[3], Clip(middle, AtLeast(kE1, h2)));
    }
    for (Polygon side :
         {Clip(cap, AtMost(kE1, Q(0))), Clip(cap, AtLeast(kE1, Q(1)))}) {
      if (side.empty()) continue;
      AddPiece(out[4], ClipAll(side, {AtLeast(kSum, Q(0)), AtMost(kSum, h3)}));
      AddPiece(out[5], ClipAll(side, {AtLeast(kSum, h3), AtMost(kSum, Q(1))}));
    }
  }
  return out;
}

void RequireBounded(const LatticeFreeBody& body) {
  if (!body.is_bounded()) {
    throw ValidationError("operation requires a bounded body, got a split");
  }
}

void RequireInterior(const LatticeFreeBody& body, const Rational2& f) {
  if (!body.ContainsInInterior(f)) {
    throw ValidationError("f = " + ToString(f.x1) + "," + ToString(f.x2) +
                          " is not in the interior of the body");
  }
}

int RegionCount(BodyKind kind) {
  switch (kind) {
    case BodyKind::kType1:
    case BodyKind::kQuadrilateral:
      return 4;
    case BodyKind::kType2:
    case BodyKind::kType3:
      return 6;
    case BodyKind::kSplit:
      break;
  }
  return 0;
}

void RequireRegion(const LatticeFreeBody& body, RegionId region) {
  if (region.body != body.kind() || region.index < 1 ||
      region.index > RegionCount(body.kind())) {
    throw ValidationError("region " + region.ToString() +
                          " is not valid for a " +
                          std::string(ToString(body.kind())) + " body");
  }
}

// Admissible splits for the Type1 closure.
const IntVec2 kFacetNormals[] = {{1, 0}, {0, 1}, {1, 1}};

bool Admissible(IntVec2 normal, const Rational2& f) {
  return !IsInteger(Dot(normal, f));
}

// Solves the square system a * x = b; false if singular.
bool Solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
           std::vector<Rational>& x) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  x.resize(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Constraint c < m is row c tight (row . s = 1); c >= m is s_{c-m} = 0.
void BasisSystem(const std::vector<std::vector<Rational>>& rows,
                 const std::vector<size_t>& basis,
                 std::vector<std::vector<Rational>>& a,
                 std::vector<Rational>& b) {
  const size_t k = basis.size();
  const size_t m = rows.size();
  a.assign(k, std::vector<Rational>(k));
  b.assign(k, Rational(0));
  for (size_t r = 0; r < k; ++r) {
    const size_t c = basis[r];
    if (c < m) {
      a[r] = rows[c];
      b[r] = 1;
    } else {
      a[r][c - m] = 1;
    }
  }
}

bool ExactBasicSolution(const std::vector<std::vector<Rational>>& rows,
                        const std::vector<size_t>& basis,
                        std::vector<Rational>& s) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  BasisSystem(rows, basis, a, b);
  if (!Solve(a, b, s)) return false;
  for (const Rational& v : s) {
    if (sgn(v) < 0) return false;
  }
  for (const auto& row : rows) {
    Rational lhs = 0;
    for (size_t j = 0; j < s.size(); ++j) lhs += row[j] * s[j];
    if (lhs < 1) return false;
  }
  return true;
}

// The all-ones objective must be a nonnegative combination of the tight
// constraint normals.
bool CertifiesOptimal(const std::vector<std::vector<Rational>>& rows,
                      const std::vector<size_t>& basis) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  BasisSystem(rows, basis, a, b);
  const size_t k = basis.size();
  std::vector<std::vector<Rational>> at(k, std::vector<Rational>(k));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) at[i][j] = a[j][i];
  }
  std::vector<Rational> multipliers;
  if (!Solve(at, std::vector<Rational>(k, Rational(1)), multipliers)) {
    return false;
  }
  return std::all_of(multipliers.begin(), multipliers.end(),
                     [](const Rational& v) { return sgn(v) >= 0; });
}

bool ApproxBasicValue(const std::vector<std::vector<Rational>>& rows,
                      const std::vector<size_t>& basis, double& value) {
  const size_t k = basis.size();
  const size_t m = rows.size();
  double a[4][5] = {};
  for (size_t r = 0; r < k; ++r) {
    const size_t c = basis[r];
    if (c < m) {
      for (size_t j = 0; j < k; ++j) a[r][j] = rows[c][j].get_d();
      a[r][k] = 1;
    } else {
      a[r][c - m] = 1;
    }
  }
  for (size_t col = 0; col < k; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < k; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    for (size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (size_t c = col; c <= k; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  double s[4];
  value = 0;
  for (size_t j = 0; j < k; ++j) {
    s[j] = a[j][k] / a[j][j];
    if (s[j] < -1e-9) return false;
    value += s[j];
  }
  for (const auto& row : rows) {
    double lhs = 0;
    for (size_t j = 0; j < k; ++j) lhs += row[j].get_d() * s[j];
    if (lhs < 1 - 1e-9) return false;
  }
  return true;
}

std::vector<std::vector<size_t>> AllBases(size_t m, size_t k) {
  const size_t total = m + k;
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    size_t i = k;
    while (i > 0 && pick[i - 1] == total - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

Rational Region::Area() const {
  Rational total = 0;
  for (const Polygon& p : pieces) total += ShoelaceArea(p);
  return total;
}

bool Region::ContainsClosed(const Rational2& x) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const Polygon& p) {
    return cutstrength::ContainsClosed(p, x);
  });
}

SplitCut SplitCoefficients(IntVec2 normal, const Rational2& f,
                           std::span<const Rational2> rays) {
  if (std::gcd(normal.x1, normal.x2) != 1) {
    throw ValidationError("split normal must be primitive");
  }
  const Rational pf = Dot(normal, f);
  if (IsInteger(pf)) {
    throw ValidationError("f is not in the interior of the split: pi.f = " +
                          ToString(pf) + " is integral");
  }
  SplitCut cut;
  cut.normal = normal;
  const mpz_class lo = Floor(pf);
  cut.offset = ToInt64(lo);
  const Rational down = Rational(lo) - pf;
  const Rational up = Rational(lo + 1) - pf;
  cut.coefficients.reserve(rays.size());
  for (const Rational2& r : rays) {
    if (sgn(r.x1) == 0 && sgn(r.x2) == 0) {
      throw ValidationError("rays must be nonzero");
    }
    const Rational pr = Dot(normal, r);
    const int s = sgn(pr);
    if (s > 0) {
      cut.coefficients.push_back(pr / up);
    } else if (s < 0) {
      cut.coefficients.push_back(pr / down);
    } else {
      cut.coefficients.emplace_back(0);
    }
  }
  return cut;
}

std::vector<Region> Regions(const LatticeFreeBody& body) {
  RequireBounded(body);
  std::vector<Region> out;
  switch (body.kind()) {
    case BodyKind::kType1:
      out = Type1Regions();
      break;
    case BodyKind::kType2:
      out = Type2Regions(body.type2());
      break;
    case BodyKind::kQuadrilateral:
      out = QuadRegions(body);
      break;
    case BodyKind::kType3:
      out = Type3Regions(body);
      break;
    case BodyKind::kSplit:
      break;
  }
  for (size_t i = 0; i < out.size(); ++i) {
    out[i].id = RegionId{body.kind(), static_cast<int>(i) + 1};
  }
  return out;
}

RegionId RegionOf(const LatticeFreeBody& body, const Rational2& f) {
  RequireBounded(body);
  RequireInterior(body, f);
  for (const Region& region : Regions(body)) {
    if (!region.ContainsClosed(f)) continue;
    // On a shared edge the chosen split may have f on its boundary; the
    // neighbouring region's split is then the one that separates f.
    if (body.kind() != BodyKind::kType1 &&
        !Admissible(ChosenSplit(body, region.id), f)) {
      continue;
    }
    return region.id;
  }
  throw std::logic_error("interior point not covered by any region");
}

IntVec2 ChosenSplit(const LatticeFreeBody& body, RegionId region) {
  RequireBounded(body);
  RequireRegion(body, region);
  const int i = region.index;
  switch (body.kind()) {
    case BodyKind::kType1:
      throw ValidationError(
          "Type1 strength uses the closure of its three facet splits, not a "
          "single split");
    case BodyKind::kType2:
      if (i == 3 || i == 4) return {0, 1};
      if (i == 5 || i == 6) return {1, 0};
      return body.type2().a2 <= 2 ? IntVec2{0, 1} : IntVec2{1, 0};
    case BodyKind::kQuadrilateral:
      return i <= 2 ? IntVec2{0, 1} : IntVec2{1, 0};
    case BodyKind::kType3:
      if (i <= 2) return {0, 1};
      if (i <= 4) return {1, 0};
      return {1, 1};
    case BodyKind::kSplit:
      break;
  }
  throw std::logic_error("unreachable");
}

CoveringLpResult CoveringLpMin(const std::vector<std::vector<Rational>>& rows,
                               int num_vars) {
  if (num_vars < 1 || num_vars > 4) {
    throw ValidationError("covering LP supports 1 to 4 variables, got " +
                          std::to_string(num_vars));
  }
  if (rows.empty()) throw ValidationError("covering LP needs at least one row");
  const size_t k = static_cast<size_t>(num_vars);
  for (const auto& row : rows) {
    if (row.size() != k) {
      throw ValidationError("covering LP row length does not match variable "
                            "count");
    }
    for (const Rational& v : row) {
      if (sgn(v) < 0) {
        throw ValidationError("covering LP coefficients must be nonnegative");
      }
    }
  }
  CoveringLpResult result;
  for (const auto& row : rows) {
    if (std::all_of(row.begin(), row.end(),
                    [](const Rational& v) { return sgn(v) == 0; })) {
      result.infinite = true;
      return result;
    }
  }

  // A row that is componentwise >= another row is implied by it.
  std::vector<const std::vector<Rational>*> kept;
  for (size_t i = 0; i < rows.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < rows.size() && !redundant; ++j) {
      if (i == j) continue;
      bool dominates = true;
      for (size_t c = 0; c < k && dominates; ++c) {
        dominates = rows[j][c] <= rows[i][c];
      }
      if (dominates && (rows[j] != rows[i] || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(&rows[i]);
  }

  std::vector<std::vector<Rational>> kept_rows;
  kept_rows.reserve(kept.size());
  for (const auto* row : kept) kept_rows.push_back(*row);
  const std::vector<std::vector<size_t>> bases = AllBases(kept_rows.size(), k);

  // Floating point ranks the bases; a basis is accepted only after exact
  // primal feasibility and nonnegative exact dual multipliers.
  std::vector<std::pair<double, size_t>> ranked;
  for (size_t i = 0; i < bases.size(); ++i) {
    double value;
    if (ApproxBasicValue(kept_rows, bases[i], value)) {
      ranked.emplace_back(value, i);
    }
  }
  std::sort(ranked.begin(), ranked.end());
  for (const auto& [value, i] : ranked) {
    if (value > ranked.front().first + 1e-6 * (1 + ranked.front().first)) break;
    std::vector<Rational> s;
    if (ExactBasicSolution(kept_rows, bases[i], s) &&
        CertifiesOptimal(kept_rows, bases[i])) {
      result.value = std::accumulate(s.begin(), s.end(), Rational(0));
      result.argmin = std::move(s);
      return result;
    }
  }

  bool found = false;
  for (const auto& basis : bases) {
    std::vector<Rational> s;
    if (!ExactBasicSolution(kept_rows, basis, s)) continue;
    Rational value = std::accumulate(s.begin(), s.end(), Rational(0));
    if (!found || value < result.value) {
      found = true;
      result.value = std::move(value);
      result.argmin = std::move(s);
    }
  }
  if (!found) throw std::logic_error("covering LP has no basic solution");
  return result;
}

Rational TableStrength(const LatticeFreeBody& body, RegionId region,
                       const Rational2& f) {
  RequireBounded(body);
  RequireRegion(body, region);
  const auto params = internal::MakeTableParams<Rational>(
      body, [](const Rational& q) { return q; });
  Rational t = internal::TableStrengthOf(params, region.index, f.x1, f.x2);
  t.canonicalize();
  return t;
}

StrengthReport StrengthSingleSplit(const LatticeFreeBody& body,
                                   const Rational2& f) {
  StrengthReport report;
  report.region = RegionOf(body, f);
  report.t_bar = TableStrength(body, report.region, f);

  const std::vector<Rational2> rays = CornerRays(body, f);
  std::vector<std::vector<Rational>> rows;
  if (body.kind() == BodyKind::kType1) {
    for (IntVec2 normal : kFacetNormals) {
      if (Admissible(normal, f)) {
        rows.push_back(SplitCoefficients(normal, f, rays).coefficients);
      }
    }
  } else {
    report.chosen_split_normal = ChosenSplit(body, report.region);
    rows.push_back(
        SplitCoefficients(*report.chosen_split_normal, f, rays).coefficients);
  }
  const CoveringLpResult lp = CoveringLpMin(rows, static_cast<int>(rays.size()));
  if (lp.infinite || 1 / lp.value != report.t_bar) {
    throw std::logic_error("region table strength " + ToString(report.t_bar) +
                           " disagrees with covering LP at f = " +
                           ToString(f.x1) + "," + ToString(f.x2));
  }
  return report;
}

Rational StrengthSplitClosureApprox(const LatticeFreeBody& body,
                                    const Rational2& f, int n) {
  RequireBounded(body);
  if (n < 1) throw ValidationError("N must be at least 1");
  RequireInterior(body, f);
  const std::vector<Rational2> rays = CornerRays(body, f);
  std::vector<std::vector<Rational>> rows;
  for (IntVec2 normal : PrimitiveDirections(n)) {
    if (!Admissible(normal, f)) continue;
    rows.push_back(SplitCoefficients(normal, f, rays).coefficients);
  }
  if (rows.empty()) throw ValidationError("no admissible split normal");
  const CoveringLpResult lp = CoveringLpMin(rows, static_cast<int>(rays.size()));
  if (lp.infinite) throw std::logic_error("corner rays do not span the plane");
  return 1 / lp.value;
}

StrengthReport Strength(const LatticeFreeBody& body, const Rational2& f,
                        int n) {
  StrengthReport report = StrengthSingleSplit(body, f);
  report.t_n = StrengthSplitClosureApprox(body, f, n);
  report.n = n;
  return report;
}

}  // namespace cutstrength
