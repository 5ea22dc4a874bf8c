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

#ifndef CUTSTRENGTH_SRC_TABLE_STRENGTH_H_
#define CUTSTRENGTH_SRC_TABLE_STRENGTH_H_

#include <stdexcept>

#include "cutstrength/lattice_geometry.h"

namespace cutstrength::internal {

template <typename T>
struct TableParams {
  BodyKind kind = BodyKind::kType1;
  T a1{}, a2{}, b1{}, b2{}, c1{}, c2{}, d1{};
  T left_base{}, right_base{};
};

template <typename T, typename Convert>
TableParams<T> MakeTableParams(const LatticeFreeBody& body, Convert convert) {
  TableParams<T> p;
  p.kind = body.kind();
  switch (body.kind()) {
    case BodyKind::kType2: {
      const Type2Params& t = body.type2();
      p.a1 = convert(t.a1);
      p.a2 = convert(t.a2);
      p.left_base = convert(t.left_base);
      p.right_base = convert(t.right_base);
      break;
    }
    case BodyKind::kQuadrilateral: {
      const QuadParams& q = body.quad();
      p.a1 = convert(q.a1);
      p.a2 = convert(q.a2);
      p.b1 = convert(q.b1);
      p.b2 = convert(q.b2);
      p.c1 = convert(q.c1);
      p.c2 = convert(q.c2);
      p.d1 = convert(q.d1);
      break;
    }
    case BodyKind::kType3: {
      const Type3Params& t = body.type3();
      p.a1 = convert(t.a1);
      p.a2 = convert(t.a2);
      p.b1 = convert(t.b1);
      p.b2 = convert(t.b2);
      p.c1 = convert(t.c1);
      p.c2 = convert(t.c2);
      break;
    }
    default:
      break;
  }
  return p;
}

template <typename T>
T TableStrengthOf(const TableParams<T>& p, int region, const T& f1,
                  const T& f2) {
  switch (p.kind) {
    case BodyKind::kType1:
      if (region == 1) return T(2);
      if (region == 2) return T((3 - f1 - f2) / (2 - f1 - f2));
      if (region == 3) return T((f2 + 1) / f2);
      return T((f1 + 1) / f1);
    case BodyKind::kType2: {
      const bool steep = p.a2 > 2;
      if (region == 5 || (region == 1 && steep)) {
        return T((f1 - p.left_base) / f1);
      }
      if (region == 6 || (region == 2 && steep)) {
        return T((p.right_base - f1) / (1 - f1));
      }
      return T((p.a2 - f2) / (1 - f2));
    }
    case BodyKind::kQuadrilateral:
      if (region == 1) return T((f2 - p.b2) / f2);
      if (region == 2) return T((p.a2 - f2) / (1 - f2));
      if (region == 3) return T((f1 - p.c1) / f1);
      return T((p.d1 - f1) / (1 - f1));
    case BodyKind::kType3: {
      const T s = f1 + f2;
      if (region == 1) return T((f2 - p.b2) / f2);
      if (region == 2) return T((p.c2 - f2) / (1 - f2));
      if (region == 3) return T((f1 - p.c1) / f1);
      if (region == 4) return T((p.a1 - f1) / (1 - f1));
      if (region == 5) return T((s - (p.b1 + p.b2)) / s);
      return T((p.a1 + p.a2 - s) / (1 - s));
    }
    case BodyKind::kSplit:
      break;
  }
  throw std::logic_error("no strength table for a split");
}

}  // namespace cutstrength::internal

#endif  // CUTSTRENGTH_SRC_TABLE_STRENGTH_H_
