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

#ifndef CUTSTRENGTH_BODY_JSON_H_
#define CUTSTRENGTH_BODY_JSON_H_

#include <optional>
#include <string_view>
#include <vector>

#include "cutstrength/lattice_geometry.h"
#include "cutstrength/rational.h"
#include "json.hpp"

namespace cutstrength {

// A parsed body descriptor. Accepted forms:
//   {"type": "split", "normal": [p1, p2], "offset": b}
//   {"type": "type1"}
//   {"type": "type2", "a": [a1, a2]}
//   {"type": "type3", "a": [a1, a2], "b1": b1}
//   {"type": "quadrilateral", "a": [a1, a2], "b": [b1, b2]}
//   {"vertices": [[x1, x2], ...]}
//   {"band": {"normal": [n1, n2], "lo": lo, "hi": hi}}
// Rationals are "p/q" strings or JSON integers.
struct BodyDescriptor {
  enum class Form { kCanonical, kVertices, kBand };
  Form form = Form::kCanonical;
  std::optional<LatticeFreeBody> body;
  std::vector<Rational2> vertices;
  std::optional<Band> band;
};

Rational RationalFromJson(const nlohmann::json& value);
Rational2 Rational2FromJson(const nlohmann::json& value);
nlohmann::ordered_json ToJson(const Rational& q);
nlohmann::ordered_json ToJson(const Rational2& x);
nlohmann::ordered_json ToJson(IntVec2 v);

// Throws ValidationError on malformed input.
BodyDescriptor ParseBodyDescriptor(const nlohmann::json& value);
BodyDescriptor ParseBodyDescriptorText(std::string_view text);

// Canonical descriptor for a body.
nlohmann::ordered_json BodyToJson(const LatticeFreeBody& body);

// Class of the described set, before any canonicalization.
BodyClass ClassifyDescriptor(const BodyDescriptor& descriptor);

// The body in canonical position and the map carrying descriptor
// coordinates onto it (identity for canonical descriptors).
CanonicalForm ResolveBody(const BodyDescriptor& descriptor);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_BODY_JSON_H_
