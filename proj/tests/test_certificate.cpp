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

#include "erpg/certificate.hpp"

namespace {

using namespace erpg;

TEST(Certificate, OddSquareDocument) {
  Plane P(make_field_of_order(9));
  const Graph er = build_er_graph(P);
  const auto cert = coclique_odd_sq_neg(P, er);
  const Json j = to_json(P, cert);
  EXPECT_EQ(j["version"], "v1");
  EXPECT_EQ(j["construction"], "odd_sq_neg");
  EXPECT_EQ(j["q"], 9);
  EXPECT_EQ(j["modulus"], Json::array({1, 0, 1}));
  EXPECT_EQ(j["size"], 22);
  EXPECT_EQ(j["claimed_size"], 22);
  EXPECT_EQ(j["points"].size(), 22u);
  EXPECT_EQ(j["points"][0], Json::parse("[[0,0],[0,0],[1,0]]"));
  EXPECT_TRUE(j["verified"]["independent"].get<bool>());
  EXPECT_TRUE(j["verified"]["size_matches"].get<bool>());
  EXPECT_EQ(certificate_points(P, j), cert.points);
}

TEST(Certificate, ByteStable) {
  Plane P(make_field_of_order(8));
  const Graph er = build_er_graph(P);
  const auto a = to_json(P, coclique_even(P, er).certificate).dump();
  const auto b = to_json(P, coclique_even(P, er).certificate).dump();
  EXPECT_EQ(a, b);
}

TEST(Certificate, TriangleFreeDocument) {
  Plane P(make_field_of_order(8));
  const Graph er = build_er_graph(P);
  const auto S = triangle_free_set(P);
  const Json j = to_json(P, S, verify_triangle_free(P, er, S));
  EXPECT_EQ(j["construction"], "triangle_free");
  EXPECT_EQ(j["size"], 36);
  for (const auto& [k, v] : j["verified"].items()) EXPECT_TRUE(v.get<bool>()) << k;
  EXPECT_EQ(certificate_points(P, j), S.points);
}

TEST(Certificate, RejectsForeignField) {
  Plane P9(make_field_of_order(9));
  Plane P8(make_field_of_order(8));
  const Json j = to_json(P9, coclique_odd_sq_neg(P9, build_er_graph(P9)));
  try {
    certificate_points(P8, j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

}  // namespace
