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

#ifndef CUTSTRENGTH_CUT_ENGINE_H_
#define CUTSTRENGTH_CUT_ENGINE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutstrength/lattice_geometry.h"
#include "cutstrength/polygon.h"
#include "cutstrength/rational.h"

namespace cutstrength {

// Split inequality sum_j coefficients[j] * s_j >= 1 for the split
// {offset <= normal . x <= offset + 1} that contains f in its interior.
struct SplitCut {
  IntVec2 normal;
  int64_t offset = 0;  // floor(normal . f)
  std::vector<Rational> coefficients;
};

// Coefficients of the split with primitive normal pi on the given rays.
// Throws ValidationError if pi is not primitive, pi . f is integral, or a ray
// is zero.
SplitCut SplitCoefficients(IntVec2 normal, const Rational2& f,
                           std::span<const Rational2> rays);

// Index into the region decomposition of a bounded body (1-based, R1...).
// Type1 has R1..R4, Type2 R1..R6, Quadrilateral R1..R4, Type3 R1..R6.
struct RegionId {
  BodyKind body = BodyKind::kType2;
  int index = 1;

  std::string ToString() const { return "R" + std::to_string(index); }
  friend bool operator==(const RegionId&, const RegionId&) = default;
};

// A region as a union of closed convex pieces (counter-clockwise).
struct Region {
  RegionId id;
  std::vector<Polygon> pieces;

  Rational Area() const;
  bool ContainsClosed(const Rational2& x) const;
};

// The decomposition used by the single-split strategy. Pieces have pairwise
// disjoint interiors and their union is the body. Throws ValidationError for
// a split.
std::vector<Region> Regions(const LatticeFreeBody& body);

// Smallest-index region whose closure contains f and whose split (if any)
// has f strictly inside. Throws ValidationError if f is not interior.
RegionId RegionOf(const LatticeFreeBody& body, const Rational2& f);

// The single split used in a region. Type1 has none (its strength comes from
// the closure of its three facet splits) and throws ValidationError.
IntVec2 ChosenSplit(const LatticeFreeBody& body, RegionId region);

struct CoveringLpResult {
  bool infinite = false;  // some row is identically zero
  Rational value;         // min sum_j s_j
  std::vector<Rational> argmin;
};

// min sum s s.t. row . s >= 1 for every row, s >= 0, by enumerating basic
// solutions. Rows must have num_vars >= 1 nonnegative entries;
// num_vars <= 4. Throws ValidationError otherwise.
CoveringLpResult CoveringLpMin(const std::vector<std::vector<Rational>>& rows,
                               int num_vars);

// Closed-form strength from the region tables; f must lie in the closure of
// region. For Type1 this is the exact split-closure strength.
Rational TableStrength(const LatticeFreeBody& body, RegionId region,
                       const Rational2& f);

struct StrengthReport {
  RegionId region;
  std::optional<IntVec2> chosen_split_normal;  // empty for Type1
  Rational t_bar;
  std::optional<Rational> t_n;
  std::optional<int> n;
};

inline constexpr int kDefaultClosureRadius = 5;

// t_bar from the region table, cross-checked against the reciprocal of the
// one-row covering LP on the corner rays (Type1: the three facet splits).
// The two routes must agree exactly; a mismatch throws std::logic_error.
StrengthReport StrengthSingleSplit(const LatticeFreeBody& body,
                                   const Rational2& f);

// Finite split-closure approximation t_N over primitive normals with
// max-norm <= n. Nonincreasing in n.
Rational StrengthSplitClosureApprox(const LatticeFreeBody& body,
                                    const Rational2& f,
                                    int n = kDefaultClosureRadius);

// StrengthSingleSplit plus t_N.
StrengthReport Strength(const LatticeFreeBody& body, const Rational2& f,
                        int n = kDefaultClosureRadius);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_CUT_ENGINE_H_
