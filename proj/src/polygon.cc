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

#include "cutstrength/polygon.h"

#include <cstdlib>

namespace cutstrength {

Rational SignedArea(std::span<const Rational2> polygon) {
  Rational twice = 0;
  const size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    twice += Cross(polygon[i], polygon[(i + 1) % n]);
  }
  return twice / 2;
}

Rational ShoelaceArea(std::span<const Rational2> polygon) {
  return abs(SignedArea(polygon));
}

std::vector<HalfPlane> EdgeHalfPlanes(std::span<const Rational2> ccw) {
  std::vector<HalfPlane> planes;
  const size_t n = ccw.size();
  planes.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Rational2& p = ccw[i];
    const Rational2 d = ccw[(i + 1) % n] - p;
    // Interior lies to the left of p -> q: d.x1*(x2-p2) - d.x2*(x1-p1) >= 0.
    Rational2 normal(d.x2, -d.x1);
    Rational bound = Dot(normal, p);
    planes.push_back({std::move(normal), std::move(bound)});
  }
  return planes;
}

Polygon Clip(const Polygon& convex, const HalfPlane& keep) {
  Polygon out;
  const size_t n = convex.size();
  if (n == 0) return out;
  auto push = [&out](Rational2 v) {
    if (out.empty() || !(out.back() == v)) out.push_back(std::move(v));
  };
  for (size_t i = 0; i < n; ++i) {
    const Rational2& p = convex[i];
    const Rational2& q = convex[(i + 1) % n];
    const Rational sp = keep.Slack(p);
    const Rational sq = keep.Slack(q);
    if (sgn(sp) >= 0) push(p);
    if ((sgn(sp) > 0 && sgn(sq) < 0) || (sgn(sp) < 0 && sgn(sq) > 0)) {
      const Rational t = sp / (sp - sq);
      push(p + t * (q - p));
    }
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  if (out.size() < 3 || sgn(SignedArea(out)) == 0) out.clear();
  return out;
}

bool ContainsClosed(std::span<const Rational2> ccw, const Rational2& x) {
  const size_t n = ccw.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    if (sgn(Cross(ccw[(i + 1) % n] - ccw[i], x - ccw[i])) < 0) return false;
  }
  return true;
}

}  // namespace cutstrength
