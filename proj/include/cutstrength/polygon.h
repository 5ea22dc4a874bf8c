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

#ifndef CUTSTRENGTH_POLYGON_H_
#define CUTSTRENGTH_POLYGON_H_

#include <span>
#include <vector>

#include "cutstrength/rational.h"

namespace cutstrength {

// Vertex list; convex polygons are stored counter-clockwise unless noted.
using Polygon = std::vector<Rational2>;

// The closed half-plane {x : normal . x <= bound}.
struct HalfPlane {
  Rational2 normal;
  Rational bound;

  Rational Slack(const Rational2& x) const { return bound - Dot(normal, x); }
};

// Positive for counter-clockwise vertex order.
Rational SignedArea(std::span<const Rational2> polygon);
Rational ShoelaceArea(std::span<const Rational2> polygon);

// Half-planes bounding a counter-clockwise convex polygon, one per edge
// (edge i runs from vertex i to vertex i+1).
std::vector<HalfPlane> EdgeHalfPlanes(std::span<const Rational2> ccw);

// Sutherland-Hodgman step against a single half-plane. The input must be
// convex; the output is convex, counter-clockwise, and may be empty. Repeated
// vertices produced by touching the boundary are removed.
Polygon Clip(const Polygon& convex, const HalfPlane& keep);

// Closed containment test for a counter-clockwise convex polygon.
bool ContainsClosed(std::span<const Rational2> ccw, const Rational2& x);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_POLYGON_H_
