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

/**
 * @file certificate.hpp
 * @brief JSON form (format "v1") of coclique and triangle-free certificates.
 *
 *   {
 *     "format": "erpg-certificate", "version": "v1",
 *     "construction": "odd_sq_neg", "q": 9, "p": 3, "n": 2,
 *     "modulus": [1, 0, 1],
 *     "parameters": { "w": [[0, 1]] },
 *     "claimed_size": 22, "size": 22,
 *     "points": [ [[1,0],[0,0],[0,0]], ... ],
 *     "verified": { "independent": true, "size_matches": true }
 *   }
 *
 * Field elements are written as coefficient vectors (low degree first) with
 * respect to "modulus"; points are normalized triples sorted by canonical
 * index. Keys appear in the order shown so the output is byte-stable.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erpg/constructions.hpp"
#include "erpg/gf.hpp"
#include "erpg/pg.hpp"
#include "json.hpp"

namespace erpg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateVersion = "v1";

inline Json fe_to_json(const Field& F, Fe a) { return Json(F.coefficients(a)); }

inline Fe fe_from_json(const Field& F, const Json& j) {
  return F.from_coefficients(j.get<std::vector<std::uint32_t>>());
}

inline Json point_to_json(const Plane& plane, std::uint32_t index) {
  const auto& p = plane.point(index);
  Json j = Json::array();
  for (auto c : p.x) j.push_back(fe_to_json(plane.field(), c));
  return j;
}

inline std::uint32_t point_from_json(const Plane& plane, const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, "point must be a triple");
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = fe_from_json(plane.field(), j[i]);
  return plane.index_of(plane.normalize(t));
}

namespace detail {

inline Json certificate_header(const Plane& plane, std::string_view construction) {
  const Field& F = plane.field();
  Json j;
  j["format"] = "erpg-certificate";
  j["version"] = kCertificateVersion;
  j["construction"] = std::string(construction);
  j["q"] = F.q();
  j["p"] = F.p();
  j["n"] = F.n();
  j["modulus"] = F.modulus();
  return j;
}

inline Json points_json(const Plane& plane, std::span<const std::uint32_t> points) {
  Json arr = Json::array();
  for (auto v : points) arr.push_back(point_to_json(plane, v));
  return arr;
}

}  // namespace detail

inline Json to_json(const Plane& plane, const CocliqueCertificate& cert) {
  const Field& F = plane.field();
  Json j = detail::certificate_header(plane, to_string(cert.construction));
  Json params = Json::object();
  for (const auto& p : cert.parameters) {
    Json vals = Json::array();
    for (auto v : p.values) vals.push_back(fe_to_json(F, v));
    params[p.name] = vals;
  }
  j["parameters"] = params;
  j["claimed_size"] = cert.claimed_size;
  j["size"] = cert.points.size();
  j["points"] = detail::points_json(plane, cert.points);
  j["verified"] = {{"independent", cert.verified.independent}, {"size_matches", cert.verified.size_matches}};
  return j;
}

inline Json to_json(const Plane& plane, const TriangleFreeSet& set, const TriangleFreeReport& report) {
  const Field& F = plane.field();
  Json j = detail::certificate_header(plane, to_string(ConstructionId::triangle_free));
  j["parameters"] = {{"alpha", Json::array({fe_to_json(F, set.alpha)})},
                     {"lambda", Json::array({fe_to_json(F, set.lambda)})}};
  j["claimed_size"] = report.claimed_size;
  j["size"] = set.points.size();
  j["points"] = detail::points_json(plane, set.points);
  j["verified"] = {{"size_matches", report.size == report.claimed_size},
                   {"triangle_free", report.triangles == 0},
                   {"regular", report.regular},
                   {"girth_at_least_5", !report.girth || *report.girth >= 5},
                   {"no_absolute", report.no_absolute},
                   {"cyclic_invariant", report.cyclic_invariant}};
  return j;
}

/// Point indices listed in a certificate document, checked against its field.
inline std::vector<std::uint32_t> certificate_points(const Plane& plane, const Json& doc) {
  if (doc.value("version", "") != kCertificateVersion) throw Error(ErrorCode::ParseError, "unsupported version");
  if (doc.at("q").get<std::uint32_t>() != plane.q() ||
      doc.at("modulus").get<std::vector<std::uint32_t>>() != plane.field().modulus()) {
    throw Error(ErrorCode::ParseError, "certificate field differs from plane field");
  }
  std::vector<std::uint32_t> out;
  for (const auto& p : doc.at("points")) out.push_back(point_from_json(plane, p));
  return out;
}

}  // namespace erpg
