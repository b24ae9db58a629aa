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
 * @file polarity.hpp
 * @brief Orthogonal (q odd) and pseudo (q even) polarities of PG(2,q) and the
 * Erdos-Renyi polarity graph ER_q.
 *
 * Orthogonal: P = (x1,x2,x3) maps to x3 X1 - 2 x2 X2 + x1 X3 = 0; the
 * absolute points form the conic X2^2 - X1 X3 = 0.
 * Pseudo: P maps to x1 X1 + x3 X2 + x2 X3 = 0; the absolute points form the
 * line X1 = 0.
 */

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "erpg/error.hpp"
#include "erpg/gf.hpp"
#include "erpg/graph.hpp"
#include "erpg/pg.hpp"

namespace erpg {

enum class PolarityKind { orthogonal, pseudo };

enum class PointClass { absolute, external, internal, nonabsolute };

constexpr std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::absolute: return "absolute";
    case PointClass::external: return "external";
    case PointClass::internal: return "internal";
    case PointClass::nonabsolute: return "nonabsolute";
  }
  return "?";
}

/// Largest q for which ER_q is materialized as a dense graph.
inline constexpr std::uint32_t kMaxGraphOrder = 128;

/// The polarity ER_q uses: orthogonal for odd q, pseudo for even q. The plane
/// must outlive the polarity.
class Polarity {
 public:
  explicit Polarity(const Plane& plane)
      : plane_(&plane), kind_(plane.field().is_even() ? PolarityKind::pseudo : PolarityKind::orthogonal) {}

  Polarity(const Plane& plane, PolarityKind kind) : plane_(&plane), kind_(kind) {
    if ((kind == PolarityKind::pseudo) != plane.field().is_even()) {
      throw Error(kind == PolarityKind::pseudo ? ErrorCode::NotEven : ErrorCode::EvenCharacteristic,
                  "polarity kind does not match the characteristic");
    }
  }

  PolarityKind kind() const noexcept { return kind_; }
  const Plane& plane() const noexcept { return *plane_; }

  Line polar(const Point& p) const {
    const Field& F = plane_->field();
    const auto& [x1, x2, x3] = p.x;
    if (kind_ == PolarityKind::pseudo) return plane_->normalize_line({x1, x3, x2});
    return plane_->normalize_line({x3, F.neg(F.mul(F.from_int(2), x2)), x1});
  }

  /// The point whose polar is l.
  Point pole(const Line& l) const {
    const Field& F = plane_->field();
    const auto& [a, b, c] = l.c;
    if (kind_ == PolarityKind::pseudo) return plane_->normalize({a, c, b});
    return plane_->normalize({c, F.neg(F.div(b, F.from_int(2))), a});
  }

  PointClass classify(const Point& p) const {
    const Field& F = plane_->field();
    const auto& [x1, x2, x3] = p.x;
    if (kind_ == PolarityKind::pseudo) {
      return x1 == F.zero() ? PointClass::absolute : PointClass::nonabsolute;
    }
    const Fe d = F.sub(F.square(x2), F.mul(x1, x3));
    if (d == F.zero()) return PointClass::absolute;
    return F.is_square(d) ? PointClass::external : PointClass::internal;
  }

  bool is_absolute(const Point& p) const { return classify(p) == PointClass::absolute; }

  /// Q lies on the polar of P.
  bool conjugate(const Point& p, const Point& q) const { return plane_->incident(q, polar(p)); }

  /// Canonical indices of the points on the polar of P.
  std::vector<std::uint32_t> polar_points(const Point& p) const { return plane_->points_on(polar(p)); }

 private:
  const Plane* plane_;
  PolarityKind kind_;
};

/// Per-point classification table, indexed by canonical point index.
inline std::vector<PointClass> classify_all(const Polarity& pol) {
  std::vector<PointClass> out;
  out.reserve(pol.plane().size());
  for (const auto& p : pol.plane().points()) out.push_back(pol.classify(p));
  return out;
}

/**
 * @brief ER_q: vertices are the points of PG(2,q), u ~ v (u != v) iff u lies
 * on the polar of v. Self-conjugate (absolute) points get no loop.
 */
inline Graph build_er_graph(const Plane& plane) {
  if (plane.q() > kMaxGraphOrder) {
    throw Error(ErrorCode::TooLarge, "ER_q is only materialized for q <= " + std::to_string(kMaxGraphOrder));
  }
  const Polarity pol(plane);
  Graph G(plane.size());
  for (std::uint32_t u = 0; u < plane.size(); ++u) {
    for (auto v : pol.polar_points(plane.point(u))) {
      if (v != u) G.add_edge(u, v);
    }
  }
  return G;
}

}  // namespace erpg
