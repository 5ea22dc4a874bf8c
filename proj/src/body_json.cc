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

#include "cutstrength/body_json.h"

#include <string>

#include "cutstrength/errors.h"

namespace cutstrength {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw ValidationError(std::string("body descriptor is missing '") + name +
                          "'");
  }
  return *it;
}

int64_t IntegerFromJson(const json& value, const char* what) {
  const Rational q = RationalFromJson(value);
  if (!IsInteger(q)) {
    throw ValidationError(std::string(what) + " must be an integer, got " +
                          ToString(q));
  }
  return ToInt64(q.get_num());
}

void RequireOnly(const json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* name : allowed) ok = ok || it.key() == name;
    if (!ok) {
      throw ValidationError("unexpected field '" + it.key() +
                            "' in body descriptor");
    }
  }
}

}  // namespace

Rational RationalFromJson(const json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) {
    return Rational(mpz_class(std::to_string(value.get<int64_t>())));
  }
  if (value.is_number_unsigned()) {
    return Rational(mpz_class(std::to_string(value.get<uint64_t>())));
  }
  throw ValidationError("expected a rational as \"p/q\" or an integer, got " +
                        value.dump());
}

Rational2 Rational2FromJson(const json& value) {
  if (!value.is_array() || value.size() != 2) {
    throw ValidationError("expected a pair of rationals, got " + value.dump());
  }
  return {RationalFromJson(value[0]), RationalFromJson(value[1])};
}

nlohmann::ordered_json ToJson(const Rational& q) { return ToString(q); }

nlohmann::ordered_json ToJson(const Rational2& x) {
  return nlohmann::ordered_json::array({ToString(x.x1), ToString(x.x2)});
}

nlohmann::ordered_json ToJson(IntVec2 v) {
  return nlohmann::ordered_json::array({v.x1, v.x2});
}

BodyDescriptor ParseBodyDescriptor(const json& value) {
  if (!value.is_object()) {
    throw ValidationError("body descriptor must be a JSON object");
  }
  BodyDescriptor d;
  if (value.contains("vertices")) {
    RequireOnly(value, {"vertices"});
    const json& list = value["vertices"];
    if (!list.is_array()) throw ValidationError("'vertices' must be an array");
    d.form = BodyDescriptor::Form::kVertices;
    for (const json& v : list) d.vertices.push_back(Rational2FromJson(v));
    NormalizeConvexPolygon(d.vertices);
    return d;
  }
  if (value.contains("band")) {
    RequireOnly(value, {"band"});
    const json& band = value["band"];
    if (!band.is_object()) throw ValidationError("'band' must be an object");
    d.form = BodyDescriptor::Form::kBand;
    d.band = Band{Rational2FromJson(Field(band, "normal")),
                  RationalFromJson(Field(band, "lo")),
                  RationalFromJson(Field(band, "hi"))};
    if (d.band->normal.x1 == 0 && d.band->normal.x2 == 0) {
      throw ValidationError("band normal must be nonzero");
    }
    if (d.band->lo >= d.band->hi) {
      throw ValidationError("band needs lo < hi");
    }
    return d;
  }
  const json& type = Field(value, "type");
  if (!type.is_string()) throw ValidationError("'type' must be a string");
  const std::string t = type.get<std::string>();
  if (t == "split") {
    RequireOnly(value, {"type", "normal", "offset"});
    const json& n = Field(value, "normal");
    if (!n.is_array() || n.size() != 2) {
      throw ValidationError("'normal' must be a pair of integers");
    }
    d.body = LatticeFreeBody::Split(
        {IntegerFromJson(n[0], "normal"), IntegerFromJson(n[1], "normal")},
        IntegerFromJson(Field(value, "offset"), "offset"));
  } else if (t == "type1") {
    RequireOnly(value, {"type"});
    d.body = LatticeFreeBody::Type1();
  } else if (t == "type2") {
    RequireOnly(value, {"type", "a"});
    const Rational2 a = Rational2FromJson(Field(value, "a"));
    d.body = LatticeFreeBody::Type2(a.x1, a.x2);
  } else if (t == "type3") {
    RequireOnly(value, {"type", "a", "b1"});
    const Rational2 a = Rational2FromJson(Field(value, "a"));
    d.body = LatticeFreeBody::Type3(a.x1, a.x2,
                                    RationalFromJson(Field(value, "b1")));
  } else if (t == "quadrilateral") {
    RequireOnly(value, {"type", "a", "b"});
    const Rational2 a = Rational2FromJson(Field(value, "a"));
    const Rational2 b = Rational2FromJson(Field(value, "b"));
    d.body = LatticeFreeBody::Quadrilateral(a.x1, a.x2, b.x1, b.x2);
  } else {
    throw ValidationError("unknown body type '" + t + "'");
  }
  return d;
}

BodyDescriptor ParseBodyDescriptorText(std::string_view text) {
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("body descriptor is not valid JSON: ") +
                          e.what());
  }
  return ParseBodyDescriptor(value);
}

nlohmann::ordered_json BodyToJson(const LatticeFreeBody& body) {
  nlohmann::ordered_json out;
  switch (body.kind()) {
    case BodyKind::kSplit:
      out["type"] = "split";
      out["normal"] = ToJson(body.split().normal);
      out["offset"] = body.split().offset;
      break;
    case BodyKind::kType1:
      out["type"] = "type1";
      break;
    case BodyKind::kType2:
      out["type"] = "type2";
      out["a"] = ToJson(Rational2(body.type2().a1, body.type2().a2));
      break;
    case BodyKind::kType3:
      out["type"] = "type3";
      out["a"] = ToJson(Rational2(body.type3().a1, body.type3().a2));
      out["b1"] = ToJson(body.type3().b1);
      break;
    case BodyKind::kQuadrilateral:
      out["type"] = "quadrilateral";
      out["a"] = ToJson(Rational2(body.quad().a1, body.quad().a2));
      out["b"] = ToJson(Rational2(body.quad().b1, body.quad().b2));
      break;
  }
  return out;
}

BodyClass ClassifyDescriptor(const BodyDescriptor& d) {
  switch (d.form) {
    case BodyDescriptor::Form::kVertices:
      return Classify(d.vertices);
    case BodyDescriptor::Form::kBand:
      return Classify(*d.band);
    case BodyDescriptor::Form::kCanonical:
      break;
  }
  if (!d.body->is_bounded()) return BodyClass::kSplit;
  return Classify(d.body->boundary());
}

CanonicalForm ResolveBody(const BodyDescriptor& d) {
  switch (d.form) {
    case BodyDescriptor::Form::kVertices:
      return Canonicalize(d.vertices);
    case BodyDescriptor::Form::kBand:
      return Canonicalize(*d.band);
    case BodyDescriptor::Form::kCanonical:
      break;
  }
  return CanonicalForm{*d.body, UnimodularMap::Identity()};
}

}  // namespace cutstrength
