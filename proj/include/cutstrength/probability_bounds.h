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

#ifndef CUTSTRENGTH_PROBABILITY_BOUNDS_H_
#define CUTSTRENGTH_PROBABILITY_BOUNDS_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cutstrength/lattice_geometry.h"
#include "cutstrength/piecewise.h"
#include "cutstrength/rational.h"

namespace cutstrength {

// P(z) = (sum of region integrals of [t <= z]) / area. Each term is the
// integral over one region or an aggregated group of regions.
struct PiecewiseBound {
  struct Term {
    std::string regions;  // e.g. "R1+R2"
    PiecewiseFunction integral;
  };
  std::vector<Term> terms;
  Rational area;

  Rational operator()(const Rational& z) const;
  std::vector<Rational> TermValues(const Rational& z) const;
  // All breakpoints of all terms, sorted and deduplicated.
  std::vector<Rational> Breakpoints() const;
  // (term label, breakpoint) for every discontinuity.
  std::vector<std::pair<std::string, Rational>> ContinuityDefects() const;
};

// Exact probability that a uniformly random f in T1 has strength <= z.
PiecewiseBound T1Bound();
Rational PT1(const Rational& z);

// Lower bound for Type2 triangles in terms of the lattice width
// 1 < w <= 2. Terms "g1" and "g2".
Rational G1(const Rational& z, const Rational& w);
Rational G2(const Rational& z, const Rational& w);
PiecewiseBound T2WidthBound(const Rational& w);
Rational PT2Lower(const Rational& z, const Rational& w);

// Region integrals for a Type2 triangle, aggregated as R1+R2, R3+R4, R5+R6.
PiecewiseBound T2Bound(const Type2Params& params);
std::array<Rational, 3> T2RegionIntegrals(const LatticeFreeBody& body,
                                          const Rational& z);

// Terms R1, R2, R3, R4.
PiecewiseBound QuadBound(const QuadParams& params);
Rational QuadLower(const LatticeFreeBody& body, const Rational& z);

// Terms R1+R2, R3+R4, R5, R6.
PiecewiseBound T3Bound(const Type3Params& params);
Rational T3Lower(const LatticeFreeBody& body, const Rational& z);

// T3Bound from raw (a1, a2, b1) with only the triangle's sign conditions
// checked; the width ordering is not enforced. Exposes the branches taken
// when a1 + a2 - b1 - 1 <= 0, which no width-ordered body reaches.
PiecewiseBound T3BoundUnchecked(const Rational& a1, const Rational& a2,
                                const Rational& b1);

// The bound appropriate for the body: exact for Type1, single-split lower
// bounds otherwise. Throws ValidationError for a split.
PiecewiseBound ClosedFormBound(const LatticeFreeBody& body);
// Throws ValidationError unless z > 1.
Rational ClosedFormLower(const LatticeFreeBody& body, const Rational& z);

struct SpecialValuesResult {
  Rational upper_miss_at_2;   // upper bound on 1 - P(2)
  Rational lower_hit_at_3_2;  // lower bound on P(3/2)
};
SpecialValuesResult SpecialValuesForWidth(const Rational& w);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_PROBABILITY_BOUNDS_H_
