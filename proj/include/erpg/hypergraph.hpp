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
 * @file hypergraph.hpp
 * @brief H_q, the 3-graph of triangles of ER_q on the non-absolute points.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "erpg/error.hpp"
#include "erpg/graph.hpp"
#include "erpg/pg.hpp"
#include "erpg/polarity.hpp"

namespace erpg {

using Triangle = std::array<std::uint32_t, 3>;

struct TriangleHypergraph {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> vertices;  // non-absolute point indices, sorted
  std::vector<Triangle> edges;          // sorted triples, lexicographic
  std::vector<char> is_vertex;          // indexed by point index
};

/// Builds H_q from ER_q. Aborts with std::logic_error if some triangle
/// passes through an absolute point.
inline TriangleHypergraph build_hypergraph(const Plane& plane, const Graph& er) {
  const Polarity pol(plane);
  TriangleHypergraph H;
  H.q = plane.q();
  H.is_vertex.assign(plane.size(), 0);
  for (std::uint32_t v = 0; v < plane.size(); ++v) {
    if (!pol.is_absolute(plane.point(v))) {
      H.vertices.push_back(v);
      H.is_vertex[v] = 1;
    }
  }
  for_each_triangle(er, [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (!H.is_vertex[a] || !H.is_vertex[b] || !H.is_vertex[c]) {
      throw std::logic_error("ER_q triangle through an absolute point");
    }
    H.edges.push_back({a, b, c});
  });
  return H;
}

inline TriangleHypergraph build_hypergraph(const Plane& plane) { return build_hypergraph(plane, build_er_graph(plane)); }

/// An edge of H inside S, or nullopt if S is independent in H.
inline std::optional<Triangle> hyper_independence_violation(const TriangleHypergraph& H,
                                                            std::span<const std::uint32_t> S) {
  std::vector<char> in(H.is_vertex.size(), 0);
  for (auto v : S) {
    if (v >= H.is_vertex.size() || !H.is_vertex[v]) {
      throw Error(ErrorCode::VertexOutOfRange, "point " + std::to_string(v) + " is not a vertex of H_q");
    }
    in[v] = 1;
  }
  for (const auto& e : H.edges) {
    if (in[e[0]] && in[e[1]] && in[e[2]]) return e;
  }
  return std::nullopt;
}

inline bool hyper_independent(const TriangleHypergraph& H, std::span<const std::uint32_t> S) {
  return !hyper_independence_violation(H, S).has_value();
}

/// Sorted "u,v,w" lines.
inline std::string to_triangle_csv(const TriangleHypergraph& H) {
  std::ostringstream os;
  for (const auto& e : H.edges) os << e[0] << ',' << e[1] << ',' << e[2] << '\n';
  return os.str();
}

/**
 * @brief Samples 8-vertex subsets and counts those spanning 4 or more edges.
 *
 * Uniform 8-subsets almost never contain an edge, so each sample is grown
 * from a random edge by repeatedly adding an edge through a vertex already
 * chosen (while it fits in 8 vertices), then padded with random vertices.
 */
inline std::uint64_t sample_dense_octets(const TriangleHypergraph& H, std::uint64_t samples, std::uint64_t seed) {
  if (H.edges.empty()) return 0;
  std::vector<std::vector<std::uint32_t>> incident(H.is_vertex.size());
  for (std::uint32_t i = 0; i < H.edges.size(); ++i) {
    for (auto v : H.edges[i]) incident[v].push_back(i);
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::uint64_t violations = 0;
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t s = 0; s < samples; ++s) {
    chosen.clear();
    auto contains = [&](std::uint32_t v) { return std::find(chosen.begin(), chosen.end(), v) != chosen.end(); };
    for (auto v : H.edges[pick(H.edges.size())]) chosen.push_back(v);
    for (int attempt = 0; attempt < 32 && chosen.size() < 8; ++attempt) {
      const auto& inc = incident[chosen[pick(chosen.size())]];
      const auto& e = H.edges[inc[pick(inc.size())]];
      std::size_t fresh = 0;
      for (auto v : e) fresh += contains(v) ? 0 : 1;
      if (chosen.size() + fresh > 8) continue;
      for (auto v : e) {
        if (!contains(v)) chosen.push_back(v);
      }
    }
    while (chosen.size() < 8) {
      const auto v = H.vertices[pick(H.vertices.size())];
      if (!contains(v)) chosen.push_back(v);
    }
    std::vector<std::uint32_t> inside;
    for (auto v : chosen) {
      for (auto i : incident[v]) {
        const auto& e = H.edges[i];
        if (contains(e[0]) && contains(e[1]) && contains(e[2])) inside.push_back(i);
      }
    }
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
    if (inside.size() >= 4) ++violations;
  }
  return violations;
}

/// Construction lower bound and leading terms of the upper bound on alpha(H_q).
struct MwBoundReport {
  std::uint32_t q = 0;
  std::uint64_t lower = 0;       // q(q+1)/2
  double upper_leading = 0.0;    // q^2/2 + q^{3/2}
  bool sane = false;             // lower <= upper_leading + 2q
};

inline MwBoundReport mw_bound_report(std::uint32_t q) {
  if (q % 2 != 0) throw Error(ErrorCode::NotEven, "bound report is for even q");
  MwBoundReport r;
  r.q = q;
  r.lower = std::uint64_t{q} * (q + 1) / 2;
  const double qd = q;
  r.upper_leading = qd * qd / 2.0 + qd * std::sqrt(qd);
  r.sane = static_cast<double>(r.lower) <= r.upper_leading + 2.0 * qd;
  return r;
}

}  // namespace erpg
