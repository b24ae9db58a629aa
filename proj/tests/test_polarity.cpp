// Copyright 2026 The erpg Authors.
//
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

#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "erpg/polarity.hpp"

namespace {

using namespace erpg;

std::map<PointClass, std::uint32_t> class_counts(const Plane& P) {
  std::map<PointClass, std::uint32_t> out;
  for (auto c : classify_all(Polarity(P))) ++out[c];
  return out;
}

// Conjugacy from the symmetric bilinear forms directly.
bool conjugate_by_form(const Field& F, const Point& a, const Point& b) {
  const auto& [x1, x2, x3] = a.x;
  const auto& [y1, y2, y3] = b.x;
  Fe s;
  if (F.is_even()) {
    s = F.add(F.add(F.mul(x1, y1), F.mul(x2, y3)), F.mul(x3, y2));
  } else {
    s = F.add(F.add(F.mul(x3, y1), F.mul(x1, y3)), F.neg(F.mul(F.from_int(2), F.mul(x2, y2))));
  }
  return s == F.zero();
}

TEST(Polarity, PolarExamples) {
  Plane P2(make_field_of_order(2));
  const Polarity pseudo(P2);
  EXPECT_EQ(pseudo.kind(), PolarityKind::pseudo);
  EXPECT_EQ(pseudo.polar(Point{{Fe{1}, Fe{0}, Fe{0}}}), (Line{{Fe{1}, Fe{0}, Fe{0}}}));

  Plane P3(make_field_of_order(3));
  const Polarity orth(P3);
  EXPECT_EQ(orth.kind(), PolarityKind::orthogonal);
  EXPECT_EQ(orth.polar(Point{{Fe{1}, Fe{0}, Fe{0}}}), (Line{{Fe{0}, Fe{0}, Fe{1}}}));
  // (1,0,1) has polar X1 + X3 = 0, which misses (1,1,1) over GF(3).
  const Point a{{Fe{1}, Fe{0}, Fe{1}}};
  const Point b{{Fe{1}, Fe{1}, Fe{1}}};
  EXPECT_EQ(orth.polar(a), (Line{{Fe{1}, Fe{0}, Fe{1}}}));
  EXPECT_FALSE(orth.conjugate(a, b));
}

TEST(Polarity, KindMustMatchCharacteristic) {
  Plane P(make_field_of_order(4));
  EXPECT_THROW(Polarity(P, PolarityKind::orthogonal), Error);
  Plane Q(make_field_of_order(5));
  EXPECT_THROW(Polarity(Q, PolarityKind::pseudo), Error);
}

TEST(Polarity, InvolutionAndPoleExhaustive) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    Plane P(make_field_of_order(q));
    const Polarity pol(P);
    for (std::uint32_t i = 0; i < P.size(); ++i) {
      const Point& x = P.point(i);
      EXPECT_EQ(pol.pole(pol.polar(x)), x);
      const Line l = P.line(i);
      EXPECT_EQ(pol.polar(pol.pole(l)), l);
    }
  }
}

TEST(Polarity, ReversesIncidence) {
  for (std::uint32_t q : {3u, 4u, 7u}) {
    Plane P(make_field_of_order(q));
    const Polarity pol(P);
    for (std::uint32_t i = 0; i < P.size(); ++i)
      for (std::uint32_t l = 0; l < P.size(); ++l) {
        const Line line = P.line(l);
        ASSERT_EQ(P.incident(P.point(i), line), P.incident(pol.pole(line), pol.polar(P.point(i))));
      }
  }
}

TEST(Polarity, ConjugacyIsSymmetricAndMatchesForm) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    Plane P(make_field_of_order(q));
    const Polarity pol(P);
    for (std::uint32_t i = 0; i < P.size(); ++i)
      for (std::uint32_t j = 0; j < P.size(); ++j) {
        const bool c = pol.conjugate(P.point(i), P.point(j));
        ASSERT_EQ(c, pol.conjugate(P.point(j), P.point(i)));
        ASSERT_EQ(c, conjugate_by_form(P.field(), P.point(i), P.point(j)));
      }
    for (std::uint32_t i = 0; i < P.size(); ++i) {
      EXPECT_EQ(pol.is_absolute(P.point(i)), pol.conjugate(P.point(i), P.point(i)));
    }
  }
}

TEST(Polarity, ClassCountsOdd) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 25u}) {
    Plane P(make_field_of_order(q));
    auto c = class_counts(P);
    EXPECT_EQ(c[PointClass::absolute], q + 1);
    EXPECT_EQ(c[PointClass::external], q * (q + 1) / 2);
    EXPECT_EQ(c[PointClass::internal], q * (q - 1) / 2);
  }
  Plane P3(make_field_of_order(3));
  auto c3 = class_counts(P3);
  EXPECT_EQ(c3[PointClass::absolute], 4u);
  EXPECT_EQ(c3[PointClass::external], 6u);
  EXPECT_EQ(c3[PointClass::internal], 3u);
  Plane P9(make_field_of_order(9));
  auto c9 = class_counts(P9);
  EXPECT_EQ(c9[PointClass::absolute], 10u);
  EXPECT_EQ(c9[PointClass::external], 45u);
  EXPECT_EQ(c9[PointClass::internal], 36u);
}

TEST(Polarity, AbsoluteLineWhenEven) {
  for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
    Plane P(make_field_of_order(q));
    const Polarity pol(P);
    std::uint32_t absolute = 0;
    for (const auto& x : P.points()) {
      const bool abs = pol.classify(x) == PointClass::absolute;
      EXPECT_EQ(abs, x.x[0] == Fe{0});
      if (abs) {
        ++absolute;
        EXPECT_TRUE(P.incident(x, pol.polar(x)));
      } else {
        EXPECT_EQ(pol.classify(x), PointClass::nonabsolute);
      }
    }
    EXPECT_EQ(absolute, q + 1);
  }
}

// Polar lines of internal, external and absolute points meet the conic in
// 0, 2 and 1 points respectively.
TEST(Polarity, PolarLineTypesOdd) {
  for (std::uint32_t q : {3u, 5u, 9u}) {
    Plane P(make_field_of_order(q));
    const Polarity pol(P);
    const auto cls = classify_all(pol);
    for (std::uint32_t i = 0; i < P.size(); ++i) {
      std::uint32_t hits = 0;
      for (auto v : pol.polar_points(P.point(i))) hits += cls[v] == PointClass::absolute;
      switch (cls[i]) {
        case PointClass::internal: EXPECT_EQ(hits, 0u); break;
        case PointClass::external: EXPECT_EQ(hits, 2u); break;
        case PointClass::absolute: EXPECT_EQ(hits, 1u); break;
        default: FAIL();
      }
    }
  }
}

TEST(ErGraph, SmallEdgeCounts) {
  Plane P2(make_field_of_order(2));
  const Graph g2 = build_er_graph(P2);
  EXPECT_EQ(g2.size(), 7u);
  EXPECT_EQ(g2.edge_count(), 9u);
  Plane P3(make_field_of_order(3));
  const Graph g3 = build_er_graph(P3);
  EXPECT_EQ(g3.size(), 13u);
  EXPECT_EQ(g3.edge_count(), 24u);
}

TEST(ErGraph, MatchesBruteForceConjugacy) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    Plane P(make_field_of_order(q));
    const Graph G = build_er_graph(P);
    std::uint64_t m = 0;
    for (std::uint32_t i = 0; i < P.size(); ++i)
      for (std::uint32_t j = i + 1; j < P.size(); ++j) {
        const bool c = conjugate_by_form(P.field(), P.point(i), P.point(j));
        m += c;
        ASSERT_EQ(G.has_edge(i, j), c);
      }
    EXPECT_EQ(G.edge_count(), m);
  }
}

TEST(ErGraph, DegreeSpectrumAndEdgeCount) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    Plane P(make_field_of_order(q));
    const Polarity pol(P);
    const Graph G = build_er_graph(P);
    EXPECT_EQ(G.edge_count(), std::uint64_t{q} * (q + 1) * (q + 1) / 2);
    std::uint32_t low = 0, high = 0;
    for (std::uint32_t v = 0; v < G.size(); ++v) {
      ASSERT_FALSE(G.has_edge(v, v));
      const auto d = G.degree(v);
      if (pol.is_absolute(P.point(v))) {
        ASSERT_EQ(d, q);
        ++low;
      } else {
        ASSERT_EQ(d, q + 1);
        ++high;
      }
    }
    EXPECT_EQ(low, q + 1);
    EXPECT_EQ(high, q * q);
  }
}

TEST(ErGraph, NoFourCycles) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    Plane P(make_field_of_order(q));
    const Graph G = build_er_graph(P);
    for (std::uint32_t u = 0; u < G.size(); ++u)
      for (std::uint32_t v = u + 1; v < G.size(); ++v) {
        ASSERT_LE(intersection_count(G.row(u), G.row(v)), 1u) << "q=" << q;
      }
  }
}

TEST(ErGraph, CapEnforced) {
  Plane P(make_field_of_order(131));
  try {
    build_er_graph(P);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

}  // namespace
