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

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cutstrength/errors.h"
#include "cutstrength/lattice_geometry.h"

namespace cutstrength {

namespace {

struct Matrix {
  int64_t m11, m12, m21, m22;
};

int64_t DistanceFromIdentity(const Matrix& m) {
  return std::abs(m.m11 - 1) + std::abs(m.m12) + std::abs(m.m21) +
         std::abs(m.m22 - 1);
}

int64_t MaxNorm(const Matrix& m) {
  return std::max({std::abs(m.m11), std::abs(m.m12), std::abs(m.m21),
                   std::abs(m.m22)});
}

// All integral matrices with |det| = 1 and entries in [-radius, radius],
// ordered so that small perturbations of the identity come first.
const std::vector<Matrix>& UnimodularMatrices(int radius) {
  static std::mutex mu;
  static std::map<int, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(radius);
  if (it != cache.end()) return it->second;
  std::vector<Matrix> all;
  for (int64_t a = -radius; a <= radius; ++a) {
    for (int64_t b = -radius; b <= radius; ++b) {
      for (int64_t c = -radius; c <= radius; ++c) {
        for (int64_t d = -radius; d <= radius; ++d) {
          const int64_t det = a * d - b * c;
          if (det == 1 || det == -1) all.push_back({a, b, c, d});
        }
      }
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Matrix& x, const Matrix& y) {
    const int64_t dx = DistanceFromIdentity(x), dy = DistanceFromIdentity(y);
    if (dx != dy) return dx < dy;
    return MaxNorm(x) < MaxNorm(y);
  });
  return cache.emplace(radius, std::move(all)).first->second;
}

std::vector<Rational2> BoundaryLatticePoints(const Polygon& ccw) {
  Rational lo1 = ccw[0].x1, hi1 = lo1, lo2 = ccw[0].x2, hi2 = lo2;
  for (const Rational2& v : ccw) {
    lo1 = std::min(lo1, v.x1);
    hi1 = std::max(hi1, v.x1);
    lo2 = std::min(lo2, v.x2);
    hi2 = std::max(hi2, v.x2);
  }
  std::vector<Rational2> points;
  const size_t n = ccw.size();
  for (mpz_class x = Ceil(lo1); x <= Floor(hi1); ++x) {
    for (mpz_class y = Ceil(lo2); y <= Floor(hi2); ++y) {
      const Rational2 p{Rational(x), Rational(y)};
      bool outside = false, touches = false;
      for (size_t i = 0; i < n && !outside; ++i) {
        const int side = sgn(Cross(ccw[(i + 1) % n] - ccw[i], p - ccw[i]));
        if (side < 0) outside = true;
        if (side == 0) touches = true;
      }
      if (!outside && touches) points.push_back(p);
    }
  }
  return points;
}

std::vector<Rational2> Sorted(std::vector<Rational2> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const Rational2* FindVertex(const std::vector<Rational2>& vertices,
                            bool (*predicate)(const Rational2&)) {
  for (const Rational2& v : vertices) {
    if (predicate(v)) return &v;
  }
  return nullptr;
}

// Reads canonical parameters off a transformed vertex list, if it is one.
std::optional<LatticeFreeBody> MatchCanonical(
    BodyClass body_class, const std::vector<Rational2>& vertices) {
  std::optional<LatticeFreeBody> body;
  try {
    switch (body_class) {
      case BodyClass::kType1Triangle:
        body = LatticeFreeBody::Type1();
        break;
      case BodyClass::kType2Triangle: {
        const Rational2* apex = FindVertex(vertices, [](const Rational2& v) {
          return 0 < v.x1 && v.x1 < 1 && v.x2 > 1;
        });
        if (apex == nullptr) return std::nullopt;
        body = LatticeFreeBody::Type2(apex->x1, apex->x2);
        break;
      }
      case BodyClass::kType3Triangle: {
        const Rational2* a = FindVertex(vertices, [](const Rational2& v) {
          return v.x1 > 1 && 0 < v.x2 && v.x2 < 1;
        });
        const Rational2* b = FindVertex(vertices, [](const Rational2& v) {
          return 0 < v.x1 && v.x1 < 1 && v.x2 < 0;
        });
        if (a == nullptr || b == nullptr) return std::nullopt;
        body = LatticeFreeBody::Type3(a->x1, a->x2, b->x1);
        break;
      }
      case BodyClass::kQuadrilateral: {
        const Rational2* a = FindVertex(vertices, [](const Rational2& v) {
          return 0 < v.x1 && v.x1 < 1 && v.x2 > 1;
        });
        const Rational2* b = FindVertex(vertices, [](const Rational2& v) {
          return 0 < v.x1 && v.x1 < 1 && v.x2 < 0;
        });
        if (a == nullptr || b == nullptr) return std::nullopt;
        body = LatticeFreeBody::Quadrilateral(a->x1, a->x2, b->x1, b->x2);
        break;
      }
      default:
        return std::nullopt;
    }
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  if (Sorted(body->vertices()) != Sorted(vertices)) return std::nullopt;
  return body;
}

}  // namespace

CanonicalForm Canonicalize(std::span<const Rational2> vertices, int radius) {
  if (radius < 1) throw ValidationError("search radius must be >= 1");
  const BodyClass body_class = Classify(vertices);
  if (body_class == BodyClass::kNotMaximalLatticeFree) {
    throw ValidationError("polygon is not maximal lattice-free");
  }
  const Polygon ccw = NormalizeConvexPolygon(vertices);
  const std::vector<Rational2> anchors = BoundaryLatticePoints(ccw);

  std::vector<Rational2> moved(ccw.size());
  for (const Matrix& m : UnimodularMatrices(radius)) {
    const UnimodularMap linear(m.m11, m.m12, m.m21, m.m22);
    for (const Rational2& anchor : anchors) {
      const Rational2 image = linear.Apply(anchor);
      const UnimodularMap map(m.m11, m.m12, m.m21, m.m22,
                              -ToInt64(image.x1.get_num()),
                              -ToInt64(image.x2.get_num()));
      for (size_t i = 0; i < ccw.size(); ++i) moved[i] = map.Apply(ccw[i]);
      if (std::optional<LatticeFreeBody> body =
              MatchCanonical(body_class, moved)) {
        return {std::move(*body), map};
      }
    }
  }
  throw ValidationError("no canonical form found with matrix entries in [-" +
                        std::to_string(radius) + ", " +
                        std::to_string(radius) + "]");
}

}  // namespace cutstrength
