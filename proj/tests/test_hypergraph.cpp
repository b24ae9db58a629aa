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

#include <algorithm>
#include <cmath>
#include <vector>

#include "erpg/constructions.hpp"
#include "erpg/hypergraph.hpp"

namespace {

using namespace erpg;

TEST(Hypergraph, EdgeCounts) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u}) {
    Plane P(make_field_of_order(q));
    const auto H = build_hypergraph(P);
    EXPECT_EQ(H.edges.size(), std::uint64_t{q} * (q * q - 1) / 6) << "q=" << q;
    EXPECT_EQ(H.vertices.size(), q * q);
    EXPECT_TRUE(std::is_sorted(H.edges.begin(), H.edges.end()));
  }
  Plane P3(make_field_of_order(3));
  EXPECT_EQ(build_hypergraph(P3).edges.size(), 4u);
  Plane P4(make_field_of_order(4));
  EXPECT_EQ(build_hypergraph(P4).edges.size(), 10u);
  Plane P8(make_field_of_order(8));
  EXPECT_EQ(build_hypergraph(P8).edges.size(), 84u);
}

TEST(Hypergraph, EdgesAreTrianglesOffTheAbsoluteSet) {
  Plane P(make_field_of_order(7));
  const Graph er = build_er_graph(P);
  const Polarity pol(P);
  const auto H = build_hypergraph(P, er);
  for (const auto& e : H.edges) {
    EXPECT_TRUE(er.has_edge(e[0], e[1]) && er.has_edge(e[1], e[2]) && er.has_edge(e[0], e[2]));
    for (auto v : e) EXPECT_FALSE(pol.is_absolute(P.point(v)));
  }
}

TEST(Hypergraph, Independence) {
  Plane P(make_field_of_order(4));
  const auto H = build_hypergraph(P);
  const auto& e = H.edges.front();
  const std::vector<std::uint32_t> pair{e[0], e[1]};
  EXPECT_TRUE(hyper_independent(H, pair));
  const std::vector<std::uint32_t> whole{e[0], e[1], e[2]};
  const auto w = hyper_independence_violation(H, whole);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, e);
  // Point 0 is (0,0,1), absolute for the pseudo polarity.
  try {
    hyper_independent(H, std::vector<std::uint32_t>{0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::VertexOutOfRange);
  }
}

TEST(Hypergraph, TriangleFreeSetsAreIndependent) {
  for (std::uint32_t q : {4u, 8u, 16u}) {
    Plane P(make_field_of_order(q));
    const auto H = build_hypergraph(P);
    const auto S = triangle_free_set(P);
    EXPECT_EQ(S.points.size(), q * (q + 1) / 2);
    EXPECT_TRUE(hyper_independent(H, S.points)) << "q=" << q;
  }
}

TEST(Hypergraph, CsvExport) {
  Plane P(make_field_of_order(3));
  const auto H = build_hypergraph(P);
  const auto csv = to_triangle_csv(H);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 4u);
  const auto& e = H.edges.front();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]));
}

// No 8 vertices span 4 or more edges; sampled.
TEST(Hypergraph, DenseOctetsAbsent) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    Plane P(make_field_of_order(q));
    const auto H = build_hypergraph(P);
    EXPECT_EQ(sample_dense_octets(H, 10000, q), 0u) << "q=" << q;
  }
}

TEST(Hypergraph, BoundReport) {
  const auto r8 = mw_bound_report(8);
  EXPECT_EQ(r8.lower, 36u);
  EXPECT_DOUBLE_EQ(r8.upper_leading, 32.0 + 8.0 * std::sqrt(8.0));
  EXPECT_TRUE(r8.sane);
  const auto r16 = mw_bound_report(16);
  EXPECT_EQ(r16.lower, 136u);
  EXPECT_DOUBLE_EQ(r16.upper_leading, 192.0);
  const auto r64 = mw_bound_report(64);
  EXPECT_EQ(r64.lower, 2080u);
  EXPECT_DOUBLE_EQ(r64.upper_leading, 2560.0);
  try {
    mw_bound_report(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEven);
  }
}

}  // namespace
