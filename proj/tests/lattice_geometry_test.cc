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

#include "cutstrength/lattice_geometry.h"

#include <gtest/gtest.h>

#include <random>

#include "cutstrength/errors.h"
#include "test_util.h"

namespace cutstrength {
namespace {

using testing::P;
using testing::R;

oracle::Poly ToOracle(const std::vector<Rational2>& v) {
  oracle::Poly out;
  for (const Rational2& p : v) out.push_back({p.x1, p.x2});
  return out;
}

TEST(LatticeWidthTest, Examples) {
  EXPECT_EQ(LatticeWidth(LatticeFreeBody::Split({0, 1}, 0)), 1);
  EXPECT_EQ(LatticeWidth(LatticeFreeBody::Split({2, 3}, -4)), 1);
  EXPECT_EQ(LatticeWidth(LatticeFreeBody::Type1()), 2);
  EXPECT_EQ(LatticeWidth(testing::T2Fixture()), R(3, 2));
  EXPECT_EQ(oracle::WidthScan(ToOracle(testing::T2Fixture().vertices()), 10),
            R(3, 2));
}

TEST(LatticeWidthTest, ClosedFormMatchesDirectionScan) {
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    const Rational w = LatticeWidth(body);
    EXPECT_EQ(w, oracle::WidthScan(ToOracle(body.vertices()), 10));
    EXPECT_EQ(w, LatticeWidthByEnumeration(body.vertices(), 10));
  }
}

TEST(LatticeWidthTest, Type2WidthInHalfOpenUnitToTwo) {
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    if (body.kind() != BodyKind::kType2) continue;
    const Rational w = LatticeWidth(body);
    EXPECT_GT(w, 1);
    EXPECT_LE(w, 2);
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(Classify(Band{P("0", "1"), R(0), R(1)}), BodyClass::kSplit);
  const std::vector<Rational2> t1 = {P("0", "0"), P("2", "0"), P("0", "2")};
  EXPECT_EQ(Classify(t1), BodyClass::kType1Triangle);
  const std::vector<Rational2> quad = {P("-1/2", "1/2"), P("1/2", "-1/2"),
                                       P("3/2", "1/2"), P("1/2", "3/2")};
  EXPECT_EQ(Classify(quad), BodyClass::kQuadrilateral);
  EXPECT_EQ(oracle::InteriorLatticePoints(ToOracle(quad)), 0);
}

TEST(ClassifyTest, CanonicalBodiesClassifyAsTheirKind) {
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    EXPECT_EQ(Classify(body.boundary()), ClassOf(body.kind()));
    EXPECT_EQ(oracle::InteriorLatticePoints(ToOracle(body.boundary())), 0);
  }
}

TEST(ClassifyTest, NotMaximalCases) {
  // Interior lattice point.
  EXPECT_EQ(Classify(std::vector<Rational2>{P("-1", "-1"), P("3", "-1"),
                                            P("-1", "3")}),
            BodyClass::kNotMaximalLatticeFree);
  // Lattice-free but a facet without lattice points in its relative interior.
  EXPECT_EQ(Classify(std::vector<Rational2>{P("1/4", "1/4"), P("3/4", "1/4"),
                                            P("1/2", "3/4")}),
            BodyClass::kNotMaximalLatticeFree);
  // Unit square: lattice points only at vertices.
  EXPECT_EQ(Classify(std::vector<Rational2>{P("0", "0"), P("1", "0"),
                                            P("1", "1"), P("0", "1")}),
            BodyClass::kNotMaximalLatticeFree);
  EXPECT_EQ(Classify(Band{P("0", "1"), R(0), R(2)}),
            BodyClass::kNotMaximalLatticeFree);
  EXPECT_EQ(Classify(Band{P("0", "2"), R(0), R(2)}), BodyClass::kSplit);
}

TEST(ClassifyTest, RejectsInvalidPolygons) {
  EXPECT_THROW(Classify(std::vector<Rational2>{P("0", "0"), P("1", "1"),
                                               P("2", "2")}),
               ValidationError);
  EXPECT_THROW(Classify(std::vector<Rational2>{P("0", "0"), P("2", "0"),
                                               P("1", "1/4"), P("1", "2")}),
               ValidationError);
  EXPECT_THROW(Classify(Band{P("0", "0"), R(0), R(1)}), ValidationError);
}

TEST(GaugeTest, Examples) {
  const LatticeFreeBody t2 = testing::T2Fixture();
  const Rational2 f = P("1/2", "1/2");
  for (const Rational2& r : CornerRays(t2, f)) {
    EXPECT_EQ(Gauge(t2, f, r), 1);
    EXPECT_EQ(Gauge(t2, f, R(2) * r), 2);
  }
  const LatticeFreeBody split = LatticeFreeBody::Split({0, 1}, 0);
  EXPECT_EQ(Gauge(split, f, P("5", "0")), 0);
  EXPECT_EQ(Gauge(split, f, P("0", "1/2")), 1);
}

TEST(GaugeTest, Errors) {
  const LatticeFreeBody t2 = testing::T2Fixture();
  EXPECT_THROW(Gauge(t2, P("1/2", "1/2"), P("0", "0")), ValidationError);
  EXPECT_THROW(Gauge(t2, P("5", "5"), P("1", "0")), ValidationError);
  EXPECT_THROW(Gauge(t2, P("0", "0"), P("1", "0")), ValidationError);
}

TEST(GaugeTest, HomogeneityAndBoundaryCharacterization) {
  std::mt19937_64 rng(11);
  const Rational lambdas[] = {R(1, 2), R(2), R(7, 3)};
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    for (int trial = 0; trial < 5; ++trial) {
      const Rational2 f = testing::RandomInterior(rng, body);
      Rational2 r(testing::RandomBetween(rng, R(-1), R(1)),
                  testing::RandomBetween(rng, R(-1), R(1)));
      const Rational g = Gauge(body, f, r);
      ASSERT_GT(g, 0);
      const Rational2 scaled = (1 / g) * r;
      EXPECT_EQ(Gauge(body, f, scaled), 1);
      EXPECT_TRUE(body.OnBoundary(f + scaled));
      EXPECT_FALSE(body.OnBoundary(f + R(1, 2) * scaled));
      for (const Rational& l : lambdas) {
        EXPECT_EQ(Gauge(body, f, l * r), l * g);
      }
    }
  }
}

TEST(CornerRaysTest, Examples) {
  EXPECT_EQ(CornerRays(LatticeFreeBody::Type1(), P("1/2", "1/2")),
            (std::vector<Rational2>{P("-1/2", "-1/2"), P("3/2", "-1/2"),
                                    P("-1/2", "3/2")}));
  EXPECT_EQ(CornerRays(testing::T2Fixture(), P("1/2", "1/2")),
            (std::vector<Rational2>{P("-3/2", "-1/2"), P("3/2", "-1/2"),
                                    P("0", "1")}));
  const LatticeFreeBody q = testing::QuadFixture();
  const Rational2 f = P("1/2", "1/2");
  const std::vector<Rational2> rays = CornerRays(q, f);
  ASSERT_EQ(rays.size(), 4u);
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rays[i], q.vertices()[i] - f);
    EXPECT_EQ(Gauge(q, f, rays[i]), 1);
  }
  EXPECT_THROW(CornerRays(LatticeFreeBody::Split({0, 1}, 0), f), ValidationError);
}

TEST(AreaTest, Examples) {
  EXPECT_EQ(Area(LatticeFreeBody::Type1()), 2);
  EXPECT_EQ(Area(testing::T2Fixture()), R(9, 4));
  const LatticeFreeBody q = testing::QuadFixture();
  EXPECT_EQ(q.quad().c1, R(-4, 7));
  EXPECT_EQ(q.quad().d1, R(31, 19));
  EXPECT_EQ(Area(q), (R(3, 2) + R(3, 10) + R(31, 19) + R(4, 7)) / 2);
  EXPECT_THROW(Area(LatticeFreeBody::Split({0, 1}, 0)), ValidationError);
}

TEST(AreaTest, ClosedFormEqualsShoelace) {
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    EXPECT_EQ(Area(body), AreaClosedForm(body));
    EXPECT_EQ(Area(body), oracle::AreaOf(ToOracle(body.boundary())));
  }
}

TEST(BodyTest, Type3FixtureDerivedVertices) {
  const LatticeFreeBody t3 = testing::T3Fixture();
  EXPECT_EQ(t3.type3().b2, R(-27, 200));
  EXPECT_EQ(t3.type3().c1, R(-60, 67));
  EXPECT_EQ(t3.type3().c2, R(81, 67));
  EXPECT_EQ(LatticeWidth(t3), t3.type3().c2 - t3.type3().b2);
}

TEST(BodyTest, DerivedVerticesMatchIndependentFormulas) {
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    if (body.kind() == BodyKind::kQuadrilateral) {
      const QuadParams& q = body.quad();
      const oracle::QuadVertices v = oracle::QuadDerived(q.a1, q.a2, q.b1, q.b2);
      EXPECT_EQ(q.c1, v.c1);
      EXPECT_EQ(q.c2, v.c2);
      EXPECT_EQ(q.d1, v.d1);
      EXPECT_EQ(q.d2, v.d2);
      EXPECT_EQ(q.theta, v.theta);
    } else if (body.kind() == BodyKind::kType3) {
      const Type3Params& t = body.type3();
      const oracle::T3Vertices v = oracle::T3Derived(t.a1, t.a2, t.b1);
      EXPECT_EQ(t.b2, v.b2);
      EXPECT_EQ(t.c1, v.c1);
      EXPECT_EQ(t.c2, v.c2);
    }
  }
}

TEST(BodyTest, RejectsOutOfRangeParameters) {
  EXPECT_THROW(LatticeFreeBody::Type2(R(0), R(3, 2)), ValidationError);
  EXPECT_THROW(LatticeFreeBody::Type2(R(1, 2), R(1)), ValidationError);
  EXPECT_THROW(LatticeFreeBody::Type3(R(1), R(1, 2), R(1, 2)), ValidationError);
  EXPECT_THROW(LatticeFreeBody::Type3(R(3), R(3, 10), R(9, 10)), ValidationError);
  EXPECT_THROW(LatticeFreeBody::Quadrilateral(R(3, 5), R(3, 2), R(2, 5), R(-3, 10)),
               ValidationError);
  EXPECT_THROW(LatticeFreeBody::Quadrilateral(R(2, 5), R(3, 2), R(3, 5), R(-3, 5)),
               ValidationError);
  EXPECT_THROW(LatticeFreeBody::Split({2, 4}, 0), ValidationError);
  EXPECT_THROW(LatticeFreeBody::Split({0, 0}, 0), ValidationError);
}

TEST(UnimodularMapTest, ComposeInverseAndDeterminant) {
  const UnimodularMap m(2, 1, 1, 1, 3, -2);
  const Rational2 x = P("1/3", "-5/7");
  EXPECT_EQ(m.Inverse().Apply(m.Apply(x)), x);
  EXPECT_EQ(m.Compose(m.Inverse()), UnimodularMap::Identity());
  EXPECT_EQ(std::abs(m.Determinant()), 1);
  EXPECT_THROW(UnimodularMap(2, 0, 0, 1), ValidationError);
}

std::vector<Rational2> Mapped(const UnimodularMap& m,
                              const std::vector<Rational2>& v) {
  std::vector<Rational2> out;
  for (const Rational2& p : v) out.push_back(m.Apply(p));
  return out;
}

bool SameVertexSet(std::vector<Rational2> a, std::vector<Rational2> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

TEST(CanonicalizeTest, AlreadyCanonicalType2) {
  const LatticeFreeBody t2 = testing::T2Fixture();
  const CanonicalForm c = Canonicalize(t2.boundary());
  EXPECT_EQ(c.body.kind(), BodyKind::kType2);
  EXPECT_EQ(c.body.type2().a1, R(1, 2));
  EXPECT_EQ(c.body.type2().a2, R(3, 2));
  EXPECT_EQ(c.map, UnimodularMap::Identity());
}

TEST(CanonicalizeTest, ShearedType1) {
  const UnimodularMap shear(1, 1, 0, 1);
  const std::vector<Rational2> input =
      Mapped(shear, LatticeFreeBody::Type1().boundary());
  const CanonicalForm c = Canonicalize(input);
  EXPECT_EQ(c.body.kind(), BodyKind::kType1);
  EXPECT_TRUE(SameVertexSet(Mapped(c.map, input), c.body.vertices()));
  EXPECT_EQ(c.map, shear.Inverse());
}

TEST(CanonicalizeTest, TranslatedType2) {
  const UnimodularMap shift(1, 0, 0, 1, 3, -2);
  const std::vector<Rational2> input = Mapped(shift, testing::T2Fixture().boundary());
  const CanonicalForm c = Canonicalize(input);
  EXPECT_EQ(c.body.type2().a1, R(1, 2));
  EXPECT_EQ(c.body.type2().a2, R(3, 2));
  EXPECT_EQ(c.map.t1(), -3);
  EXPECT_EQ(c.map.t2(), 2);
}

TEST(CanonicalizeTest, RoundTripPreservesClassOnGrid) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2);
  int checked = 0;
  for (const LatticeFreeBody& body : testing::BodyGrid()) {
    if (checked++ % 3 != 0) continue;
    UnimodularMap m;
    while (true) {
      const int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
      if (std::abs(a * d - b * c) == 1) {
        m = UnimodularMap(a, b, c, d, coef(rng), coef(rng));
        break;
      }
    }
    const std::vector<Rational2> input = Mapped(m, body.boundary());
    const CanonicalForm c = Canonicalize(input);
    EXPECT_EQ(ClassOf(c.body.kind()), Classify(input));
    EXPECT_EQ(Classify(c.body.boundary()), Classify(input));
    EXPECT_TRUE(SameVertexSet(Mapped(c.map, input), c.body.vertices()));
    EXPECT_EQ(LatticeWidth(c.body), LatticeWidthByEnumeration(input));
  }
}

TEST(CanonicalizeTest, Band) {
  const CanonicalForm c = Canonicalize(Band{P("2", "3"), R(5), R(6)});
  EXPECT_EQ(c.body.kind(), BodyKind::kSplit);
  // Points on the two lines land on x2 = 0 and x2 = 1.
  EXPECT_EQ(c.map.Apply(P("1", "1")).x2, 0);
  EXPECT_EQ(c.map.Apply(P("0", "2")).x2, 1);
}

TEST(CanonicalizeTest, Errors) {
  EXPECT_THROW(Canonicalize(std::vector<Rational2>{P("0", "0"), P("1", "0"),
                                                   P("1", "1"), P("0", "1")}),
               ValidationError);
  EXPECT_THROW(Canonicalize(Band{P("0", "1"), R(0), R(2)}), ValidationError);
  const UnimodularMap far(7, 8, 6, 7);
  EXPECT_THROW(Canonicalize(Mapped(far, LatticeFreeBody::Type1().boundary()), 1),
               ValidationError);
}

}  // namespace
}  // namespace cutstrength
