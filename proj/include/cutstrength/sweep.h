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

#ifndef CUTSTRENGTH_SWEEP_H_
#define CUTSTRENGTH_SWEEP_H_

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutstrength/monte_carlo.h"
#include "cutstrength/rational.h"

namespace cutstrength {

enum class Family { kType2, kQuadrilateral, kType3 };

std::string_view ToString(Family family);
// Accepts "type2", "quadrilateral" (or "quad") and "type3".
Family ParseFamily(std::string_view text);

// Values of one parameter: an explicit list, or lo, lo+step, ..., <= hi.
struct Axis {
  std::vector<Rational> values;
  std::optional<Rational> lo, hi, step;

  static Axis List(std::vector<Rational> values);
  static Axis Range(Rational lo, Rational hi, Rational step);
  // "lo:hi:step" or "v1,v2,...".
  static Axis Parse(std::string_view text);

  std::vector<Rational> Expand() const;
};

inline const Rational kDefaultGridStep(1, 50);

// Parameters not given an axis use the family defaults at the given step:
//   type2: w in (1, 2];
//   quadrilateral: a1 in (0,1), b1 in [a1, 1), a2 in (1, 2), b2 in [-(a2-1), 0);
//   type3: a1 in {3, ..., 10}, a2 in (0,1), b1 in (0,1).
// Combinations that do not form a valid canonical body are skipped.
struct GridSpec {
  std::map<std::string, Axis> axes;
  Rational step = kDefaultGridStep;
};

struct GridRow {
  std::vector<std::pair<std::string, Rational>> params;
  Rational w, z, bound;
  std::optional<McEstimate> mc;
};

// Rows sorted by w descending (ties keep grid order). With samples > 0 each
// row also carries a Monte Carlo estimate. Throws ValidationError if no grid
// point is valid.
std::vector<GridRow> SweepGrid(Family family, const GridSpec& grid,
                               const Rational& z, int64_t samples = 0,
                               uint64_t seed = 0);

// Header params,w,z,bound,mc_estimate,mc_stderr,samples,seed. Params are
// written as name=value pairs joined by ';'.
void WriteCsv(const std::vector<GridRow>& rows, std::ostream& out);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_SWEEP_H_
