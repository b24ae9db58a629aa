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
 * @file constructions.hpp
 * @brief Explicit cocliques of ER_q and the even-q triangle-free point set.
 *
 * q an odd square, sqrt(q) = 3 mod 4:
 *   conic X2^2 = X1 X3 together with the orbit of (1,0,w), w a non-square,
 *   under the lift G of PGL(2, sqrt q).
 * q an odd square, sqrt(q) = 1 mod 4:
 *   conic together with the orbit of (1,0,w) under
 *   K = { [[a^2,2ac,c^2],[0,a,c],[0,0,1]] : a^(sqrt q + 1) = 1 }.
 * q even:
 *   Denniston arcs built from the pencil
 *   C_lambda : X2^2 + X2 X3 + alpha X3^2 + lambda X1^2 = 0, Tr(alpha) = 1,
 *   over A = { x^2 : x in N } where Tr(x y) = 0 on N; and the set of points
 *   off X1 = 0 whose polar is secant to C_{lambda^2}, Tr(lambda) = 0.
 *
 * Every construction is returned with its verification flags; nothing is
 * assumed from the theory that is not also checked.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erpg/error.hpp"
#include "erpg/gf.hpp"
#include "erpg/graph.hpp"
#include "erpg/pg.hpp"
#include "erpg/polarity.hpp"

namespace erpg {

enum class ConstructionId { odd_sq_neg, odd_sq_pos, even_arc, even_sq_subfield_arc, triangle_free };

constexpr std::string_view to_string(ConstructionId id) {
  switch (id) {
    case ConstructionId::odd_sq_neg: return "odd_sq_neg";
    case ConstructionId::odd_sq_pos: return "odd_sq_pos";
    case ConstructionId::even_arc: return "even_arc";
    case ConstructionId::even_sq_subfield_arc: return "even_sq_subfield_arc";
    case ConstructionId::triangle_free: return "triangle_free";
  }
  return "?";
}

/// A named list of field elements (w, alpha, lambda, N, A, ...).
struct Parameter {
  std::string name;
  std::vector<Fe> values;
};

struct CocliqueCertificate {
  ConstructionId construction = ConstructionId::odd_sq_neg;
  std::uint32_t q = 0;
  std::vector<Parameter> parameters;
  std::vector<std::uint32_t> points;  // canonical point indices, sorted
  std::uint64_t claimed_size = 0;
  struct {
    bool independent = false;
    bool size_matches = false;
  } verified;

  bool ok() const noexcept { return verified.independent && verified.size_matches; }
};

// ---------------------------------------------------------------------------
// Closed-form sizes.

namespace detail {

inline std::uint64_t isqrt_exact(std::uint64_t q, ErrorCode err, const char* what) {
  auto r = erpg::detail::exact_sqrt(q);
  if (!r) throw Error(err, what);
  return *r;
}

}  // namespace detail

/// (q^{3/2} - sqrt q)/2 + q + 1
inline std::uint64_t odd_sq_neg_size(std::uint64_t q) {
  const auto s = detail::isqrt_exact(q, ErrorCode::NotOddSquare, "q is not a square");
  return (s * s * s - s) / 2 + q + 1;
}

/// (q^{3/2} + q)/2 + q + 1
inline std::uint64_t odd_sq_pos_size(std::uint64_t q) {
  const auto s = detail::isqrt_exact(q, ErrorCode::NotOddSquare, "q is not a square");
  return (s * s * s + q) / 2 + q + 1;
}

/// q^{3/2}/sqrt 2 - q + sqrt(q/2), i.e. (d-1) q + d with d = sqrt(q/2).
inline std::uint64_t even_arc_size(std::uint64_t q) {
  const auto d = detail::isqrt_exact(q / 2, ErrorCode::NotOddPower, "q/2 is not a square");
  return (d - 1) * q + d;
}

/// q^{3/2} - q + sqrt q
inline std::uint64_t even_sq_arc_size(std::uint64_t q) {
  const auto s = detail::isqrt_exact(q, ErrorCode::NotOddSquare, "q is not a square");
  return (s - 1) * q + s;
}

// ---------------------------------------------------------------------------
// Odd q: conic groups and orbits.

namespace detail {

inline std::uint32_t require_odd_square(const Plane& plane) {
  const Field& F = plane.field();
  if (F.is_even() || !F.has_subfield()) {
    throw Error(ErrorCode::NotOddSquare, "q = " + std::to_string(F.q()) + " is not an odd square");
  }
  return F.sqrt_q();
}

inline std::vector<char> membership(std::uint32_t n, std::span<const std::uint32_t> set) {
  std::vector<char> in(n, 0);
  for (auto v : set) in[v] = 1;
  return in;
}

inline std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Points of a given class under the ER_q polarity.
inline std::vector<std::uint32_t> points_of_class(const Plane& plane, PointClass cls) {
  const Polarity pol(plane);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    if (pol.classify(plane.point(i)) == cls) out.push_back(i);
  }
  return out;
}

/// Number of points of `set` (given as a membership table) on the polar of P.
inline std::uint32_t polar_hits(const Polarity& pol, const Point& p, const std::vector<char>& in) {
  std::uint32_t hits = 0;
  for (auto v : pol.polar_points(p)) hits += in[v] ? 1 : 0;
  return hits;
}

/// Generators of the full stabilizer H = PGL(2,q) of the conic (q odd).
inline std::vector<Collineation> conic_stabilizer_generators(const Plane& plane) {
  const Field& F = plane.field();
  if (F.is_even()) throw Error(ErrorCode::EvenCharacteristic, "conic stabilizer lift needs q odd");
  const Fe z = F.zero(), o = F.one();
  return {pgl2_lift(F, F.generator(), z, z, o), pgl2_lift(F, o, o, z, o), pgl2_lift(F, z, o, o, z)};
}

/// Generators of G, the lift of PGL(2, sqrt q): the stabilizer of the Baer
/// conic c = C cap PG(2, sqrt q).
inline std::vector<Collineation> baer_conic_stabilizer_generators(const Plane& plane) {
  detail::require_odd_square(plane);
  const Field& F = plane.field();
  const Fe g = F.embed(F.subfield().generator());
  const Fe z = F.zero(), o = F.one();
  return {pgl2_lift(F, g, z, z, o), pgl2_lift(F, o, o, z, o), pgl2_lift(F, z, o, o, z)};
}

/// Every element of G by direct enumeration over a,b,c,d in GF(sqrt q),
/// deduplicated. Used to cross-check generator closure.
inline std::vector<Collineation> baer_conic_stabilizer_elements(const Plane& plane) {
  const std::uint32_t s = detail::require_odd_square(plane);
  const Field& F = plane.field();
  std::vector<Collineation> out;
  for (std::uint32_t a = 0; a < s; ++a)
    for (std::uint32_t b = 0; b < s; ++b)
      for (std::uint32_t c = 0; c < s; ++c)
        for (std::uint32_t d = 0; d < s; ++d) {
          const Fe A = F.embed(Fe{a}), B = F.embed(Fe{b}), C = F.embed(Fe{c}), D = F.embed(Fe{d});
          if (F.mul(A, D) == F.mul(B, C)) continue;
          auto m = pgl2_lift(F, A, B, C, D);
          if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
  return out;
}

enum class OrbitKind { conic, external_tangent, external, internal };

constexpr std::string_view to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::conic: return "conic";
    case OrbitKind::external_tangent: return "external-tangent";
    case OrbitKind::external: return "external";
    case OrbitKind::internal: return "internal";
  }
  return "?";
}

struct CensusEntry {
  OrbitKind kind;
  std::uint64_t size;
  std::uint32_t multiplicity;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Orbits of G on PG(2,q) minus the Baer subplane, grouped by kind and size.
struct OrbitCensus {
  std::uint32_t q = 0;
  std::vector<CensusEntry> entries;  // ordered by kind, then size

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& e : entries) t += e.size * e.multiplicity;
    return t;
  }
  friend bool operator==(const OrbitCensus&, const OrbitCensus&) = default;
};

/// The census predicted by the orbit decomposition of G:
/// conic 1 x (q - s); tangent-external 1 x (s^3 - s); external (s-2) x (s^3-s)/2;
/// internal s x (s^3-s)/2, with s = sqrt q.
inline OrbitCensus expected_orbit_census(std::uint32_t q) {
  const auto s = detail::isqrt_exact(q, ErrorCode::NotOddSquare, "q is not a square");
  if (q % 2 == 0) throw Error(ErrorCode::NotOddSquare, "q is even");
  const std::uint64_t half = (s * s * s - s) / 2;
  OrbitCensus c;
  c.q = q;
  c.entries.push_back({OrbitKind::conic, q - s, 1});
  c.entries.push_back({OrbitKind::external_tangent, s * s * s - s, 1});
  if (s > 2) c.entries.push_back({OrbitKind::external, half, static_cast<std::uint32_t>(s - 2)});
  c.entries.push_back({OrbitKind::internal, half, static_cast<std::uint32_t>(s)});
  return c;
}

/// Computes the G-orbit decomposition of PG(2,q) minus B by generator closure.
inline OrbitCensus orbit_census_odd_square(const Plane& plane) {
  detail::require_odd_square(plane);
  const Polarity pol(plane);
  const auto gens = baer_conic_stabilizer_generators(plane);

  std::vector<std::uint32_t> off_baer;
  std::vector<std::uint32_t> baer_conic;
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    const Point& p = plane.point(i);
    if (!plane.in_baer_subplane(p)) {
      off_baer.push_back(i);
    } else if (pol.is_absolute(p)) {
      baer_conic.push_back(i);
    }
  }
  // P is on a tangent of c iff P is conjugate to some point of c.
  auto on_baer_tangent = [&](const Point& p) {
    return std::any_of(baer_conic.begin(), baer_conic.end(),
                       [&](std::uint32_t r) { return pol.conjugate(plane.point(r), p); });
  };

  std::vector<std::pair<OrbitKind, std::uint64_t>> found;
  for (const auto& o : orbits(plane, gens, off_baer)) {
    const Point& rep = plane.point(o.front());
    OrbitKind kind;
    switch (pol.classify(rep)) {
      case PointClass::absolute: kind = OrbitKind::conic; break;
      case PointClass::internal: kind = OrbitKind::internal; break;
      default: kind = on_baer_tangent(rep) ? OrbitKind::external_tangent : OrbitKind::external; break;
    }
    found.emplace_back(kind, o.size());
  }
  std::sort(found.begin(), found.end());
  OrbitCensus census;
  census.q = plane.q();
  for (const auto& [kind, size] : found) {
    if (!census.entries.empty() && census.entries.back().kind == kind && census.entries.back().size == size) {
      ++census.entries.back().multiplicity;
    } else {
      census.entries.push_back({kind, size, 1});
    }
  }
  return census;
}

/// One internal orbit with the two coclique checks: the base point alone
/// (|P^perp cap O| = 0) and every point of the orbit.
struct OrbitCheck {
  std::vector<std::uint32_t> orbit;  // sorted
  std::uint32_t base = 0;
  bool base_point_ok = false;
  bool exhaustive_ok = false;
};

inline OrbitCheck check_orbit(const Plane& plane, std::vector<std::uint32_t> orbit_points, std::uint32_t base) {
  const Polarity pol(plane);
  OrbitCheck c;
  c.orbit = detail::sorted(std::move(orbit_points));
  c.base = base;
  const auto in = detail::membership(plane.size(), c.orbit);
  c.base_point_ok = polar_hits(pol, plane.point(base), in) == 0;
  c.exhaustive_ok = std::all_of(c.orbit.begin(), c.orbit.end(),
                                [&](std::uint32_t v) { return polar_hits(pol, plane.point(v), in) == 0; });
  return c;
}

/// The G-orbits of internal points on the secant line X2 = 0, each checked.
inline std::vector<OrbitCheck> g_orbits_on_secant(const Plane& plane) {
  detail::require_odd_square(plane);
  const Field& F = plane.field();
  const Polarity pol(plane);
  const auto gens = baer_conic_stabilizer_generators(plane);
  std::vector<char> done(plane.size(), 0);
  std::vector<OrbitCheck> out;
  for (std::uint32_t z = 1; z < F.q(); ++z) {
    const Point p{{F.one(), F.zero(), Fe{z}}};
    const auto idx = plane.index_of(p);
    if (done[idx] || pol.classify(p) != PointClass::internal) continue;
    auto o = orbit(plane, gens, idx);
    for (auto v : o) done[v] = 1;
    out.push_back(check_orbit(plane, std::move(o), idx));
  }
  return out;
}

/// Whether conic + O1 + O2 is independent, for every pair of good secant
/// orbits (i < j). Exploratory; no size claim is attached.
inline std::vector<std::pair<std::pair<std::size_t, std::size_t>, bool>> secant_orbit_pair_unions(
    const Plane& plane, const Graph& er) {
  const auto checks = g_orbits_on_secant(plane);
  const auto conic = points_of_class(plane, PointClass::absolute);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, bool>> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    for (std::size_t j = i + 1; j < checks.size(); ++j) {
      auto u = conic;
      u.insert(u.end(), checks[i].orbit.begin(), checks[i].orbit.end());
      u.insert(u.end(), checks[j].orbit.begin(), checks[j].orbit.end());
      out.push_back({{i, j}, is_independent(er, u)});
    }
  }
  return out;
}

namespace detail {

inline CocliqueCertificate finish_certificate(const Graph& er, CocliqueCertificate cert) {
  std::sort(cert.points.begin(), cert.points.end());
  cert.points.erase(std::unique(cert.points.begin(), cert.points.end()), cert.points.end());
  cert.verified.independent = is_independent(er, cert.points);
  cert.verified.size_matches = cert.points.size() == cert.claimed_size;
  return cert;
}

}  // namespace detail

/// Conic plus the G-orbit of (1,0,w), w the first non-square (sqrt q = 3 mod 4).
inline CocliqueCertificate coclique_odd_sq_neg(const Plane& plane, const Graph& er) {
  const std::uint32_t s = detail::require_odd_square(plane);
  if (s % 4 != 3) throw Error(ErrorCode::WrongResidue, "needs sqrt(q) = 3 mod 4");
  const Field& F = plane.field();
  const Fe w = F.find_nonsquare();
  const auto gens = baer_conic_stabilizer_generators(plane);
  CocliqueCertificate cert;
  cert.construction = ConstructionId::odd_sq_neg;
  cert.q = F.q();
  cert.parameters.push_back({"w", {w}});
  cert.points = points_of_class(plane, PointClass::absolute);
  const auto o = orbit(plane, gens, plane.index_of(Point{{F.one(), F.zero(), w}}));
  cert.points.insert(cert.points.end(), o.begin(), o.end());
  cert.claimed_size = odd_sq_neg_size(F.q());
  return detail::finish_certificate(er, std::move(cert));
}

/// K = { [[a^2,2ac,c^2],[0,a,c],[0,0,1]] : a^(sqrt q + 1) = 1, c in GF(q) },
/// enumerated a-major in canonical order.
inline std::vector<Collineation> k_group(const Plane& plane) {
  const std::uint32_t s = detail::require_odd_square(plane);
  const Field& F = plane.field();
  const Fe two = F.from_int(2);
  std::vector<Collineation> out;
  for (std::uint32_t av = 1; av < F.q(); ++av) {
    const Fe a{av};
    if (F.pow(a, s + 1) != F.one()) continue;
    for (std::uint32_t cv = 0; cv < F.q(); ++cv) {
      const Fe c{cv};
      out.push_back(make_collineation(F, {F.square(a), F.mul(two, F.mul(a, c)), F.square(c), F.zero(), a, c,
                                          F.zero(), F.zero(), F.one()}));
    }
  }
  return out;
}

/// {k P : k in K}, sorted.
inline std::vector<std::uint32_t> k_orbit(const Plane& plane, const std::vector<Collineation>& K, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  out.reserve(K.size());
  for (const auto& k : K) out.push_back(plane.apply(k, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The K-orbits on internal points, each with its coclique checks, ordered by
/// least point.
inline std::vector<OrbitCheck> k_internal_orbits(const Plane& plane) {
  const auto K = k_group(plane);
  std::vector<char> done(plane.size(), 0);
  std::vector<OrbitCheck> out;
  for (auto v : points_of_class(plane, PointClass::internal)) {
    if (done[v]) continue;
    auto o = k_orbit(plane, K, v);
    for (auto x : o) done[x] = 1;
    out.push_back(check_orbit(plane, std::move(o), v));
  }
  return out;
}

/// Conic plus the K-orbit of (1,0,w), w the first non-square (sqrt q = 1 mod 4).
inline CocliqueCertificate coclique_odd_sq_pos(const Plane& plane, const Graph& er) {
  const std::uint32_t s = detail::require_odd_square(plane);
  if (s % 4 != 1) throw Error(ErrorCode::WrongResidue, "needs sqrt(q) = 1 mod 4");
  const Field& F = plane.field();
  const Fe w = F.find_nonsquare();
  CocliqueCertificate cert;
  cert.construction = ConstructionId::odd_sq_pos;
  cert.q = F.q();
  cert.parameters.push_back({"w", {w}});
  cert.points = points_of_class(plane, PointClass::absolute);
  const auto o = k_orbit(plane, k_group(plane), plane.index_of(Point{{F.one(), F.zero(), w}}));
  cert.points.insert(cert.points.end(), o.begin(), o.end());
  cert.claimed_size = odd_sq_pos_size(F.q());
  return detail::finish_certificate(er, std::move(cert));
}

// ---------------------------------------------------------------------------
// Even q: pencil of conics, Denniston arcs, triangle-free set.

namespace detail {

inline void require_even(const Field& F) {
  if (!F.is_even()) throw Error(ErrorCode::NotEven, "q = " + std::to_string(F.q()) + " is odd");
}

}  // namespace detail

/// The pencil parameter alpha: first element of trace 1.
inline Fe pencil_alpha(const Field& F) {
  detail::require_even(F);
  return F.find_trace_one();
}

/// Points of C_lambda : X2^2 + X2 X3 + alpha X3^2 + lambda X1^2 = 0, sorted.
/// C_0 is the single point U1 = (1,0,0).
inline std::vector<std::uint32_t> pencil_conic(const Plane& plane, Fe alpha, Fe lambda) {
  const Field& F = plane.field();
  detail::require_even(F);
  std::vector<std::uint32_t> out;
  // X2^2 + X2 X3 + alpha X3^2 is anisotropic, so no point of X1 = 0 lies on C_lambda.
  for (std::uint32_t y = 0; y < F.q(); ++y) {
    for (std::uint32_t z = 0; z < F.q(); ++z) {
      const Fe Y{y}, Z{z};
      const Fe v = F.add(F.add(F.square(Y), F.mul(Y, Z)), F.mul(alpha, F.square(Z)));
      if (v == lambda) out.push_back(1 + F.q() + y * F.q() + z);
    }
  }
  return out;
}

/**
 * @brief N subset of GF(2^n) with Tr(x y) = 0 for all x, y in N.
 *
 * n odd: a maximal totally isotropic GF(2)-subspace of the trace-zero
 * hyperplane under (x, y) -> Tr(x y), found greedily in canonical order;
 * |N| = 2^((n-1)/2).
 * n even: the subfield GF(sqrt q); |N| = sqrt q.
 */
inline std::vector<Fe> trace_zero_set(const Field& F) {
  detail::require_even(F);
  std::vector<Fe> span{F.zero()};
  if (F.has_subfield()) {
    span.clear();
    for (std::uint32_t s = 0; s < F.sqrt_q(); ++s) span.push_back(F.embed(Fe{s}));
  } else {
    std::vector<Fe> basis;
    const std::uint32_t target = (F.n() - 1) / 2;
    for (std::uint32_t v = 1; v < F.q() && basis.size() < target; ++v) {
      const Fe x{v};
      if (F.abs_trace(x) != 0) continue;
      if (std::find(span.begin(), span.end(), x) != span.end()) continue;
      if (!std::all_of(basis.begin(), basis.end(), [&](Fe b) { return F.abs_trace(F.mul(x, b)) == 0; })) continue;
      basis.push_back(x);
      const std::size_t old = span.size();
      for (std::size_t i = 0; i < old; ++i) span.push_back(F.add(span[i], x));
    }
    if (basis.size() != target) throw std::logic_error("isotropic subspace smaller than expected");
  }
  std::sort(span.begin(), span.end());
  return span;
}

struct MaximalArc {
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> points;  // sorted
  std::vector<Fe> A;                  // additive subgroup, sorted
  Fe alpha;
};

/// Every line meets `points` in 0 or `degree` points.
inline bool is_maximal_arc(const Plane& plane, std::span<const std::uint32_t> points, std::uint32_t degree) {
  const auto in = detail::membership(plane.size(), points);
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    std::uint32_t hits = 0;
    for (auto v : plane.points_on(plane.line(i))) hits += in[v] ? 1 : 0;
    if (hits != 0 && hits != degree) return false;
  }
  return points.size() == static_cast<std::size_t>(degree - 1) * plane.q() + degree;
}

/// Union of the conics C_a, a in A = { x^2 : x in N }.
inline MaximalArc denniston_arc(const Plane& plane, std::span<const Fe> N) {
  const Field& F = plane.field();
  detail::require_even(F);
  MaximalArc arc;
  arc.alpha = pencil_alpha(F);
  for (auto x : N) arc.A.push_back(F.square(x));
  std::sort(arc.A.begin(), arc.A.end());
  arc.A.erase(std::unique(arc.A.begin(), arc.A.end()), arc.A.end());
  for (auto a : arc.A) {
    for (auto b : arc.A) {
      if (!std::binary_search(arc.A.begin(), arc.A.end(), F.add(a, b))) {
        throw Error(ErrorCode::NotAdditive, "A is not closed under addition");
      }
    }
  }
  arc.degree = static_cast<std::uint32_t>(arc.A.size());
  for (auto a : arc.A) {
    const auto c = pencil_conic(plane, arc.alpha, a);
    arc.points.insert(arc.points.end(), c.begin(), c.end());
  }
  std::sort(arc.points.begin(), arc.points.end());
  return arc;
}

/// Every point of C_{lambda^2} has a polar line missing C_{lambda^2}.
inline bool lemma_conics_check(const Plane& plane, Fe alpha, Fe lambda) {
  const Field& F = plane.field();
  const Polarity pol(plane);
  const auto conic = pencil_conic(plane, alpha, F.square(lambda));
  const auto in = detail::membership(plane.size(), conic);
  return std::all_of(conic.begin(), conic.end(),
                     [&](std::uint32_t r) { return polar_hits(pol, plane.point(r), in) == 0; });
}

struct EvenCocliqueResult {
  CocliqueCertificate certificate;
  MaximalArc arc;
  bool maximal_arc_ok = false;
  std::vector<std::uint32_t> extension_candidates;  // off the arc, polar misses the arc; sorted
  std::vector<std::uint32_t> extended;              // greedy extension of the arc
};

namespace detail {

inline EvenCocliqueResult even_coclique(const Plane& plane, const Graph& er, ConstructionId id,
                                        std::uint64_t claimed) {
  const Field& F = plane.field();
  const Polarity pol(plane);
  EvenCocliqueResult r;
  const auto N = trace_zero_set(F);
  r.arc = denniston_arc(plane, N);
  r.maximal_arc_ok = is_maximal_arc(plane, r.arc.points, r.arc.degree);

  auto& cert = r.certificate;
  cert.construction = id;
  cert.q = F.q();
  cert.parameters.push_back({"alpha", {r.arc.alpha}});
  cert.parameters.push_back({"N", N});
  cert.parameters.push_back({"A", r.arc.A});
  cert.points = r.arc.points;
  cert.claimed_size = claimed;
  cert = finish_certificate(er, std::move(cert));

  const auto in = membership(plane.size(), r.arc.points);
  for (std::uint32_t v = 0; v < plane.size(); ++v) {
    if (!in[v] && polar_hits(pol, plane.point(v), in) == 0) r.extension_candidates.push_back(v);
  }
  if (cert.verified.independent) r.extended = greedy_extend(er, r.arc.points, r.extension_candidates);
  return r;
}

}  // namespace detail

/// Denniston arc of degree sqrt(q/2) as a coclique, q = 2^n with n odd, n >= 3.
inline EvenCocliqueResult coclique_even(const Plane& plane, const Graph& er) {
  const Field& F = plane.field();
  detail::require_even(F);
  if (F.n() % 2 == 0 || F.n() < 3) throw Error(ErrorCode::NotOddPower, "needs q = 2^n with n odd, n >= 3");
  return detail::even_coclique(plane, er, ConstructionId::even_arc, even_arc_size(F.q()));
}

/// Denniston arc of degree sqrt q over A = GF(sqrt q), q an even square.
inline EvenCocliqueResult coclique_even_square(const Plane& plane, const Graph& er) {
  const Field& F = plane.field();
  detail::require_even(F);
  if (!F.has_subfield()) throw Error(ErrorCode::NotOddSquare, "needs q an even square");
  return detail::even_coclique(plane, er, ConstructionId::even_sq_subfield_arc, even_sq_arc_size(F.q()));
}

/// Generator of the cyclic group C = { diag(1, [[a, alpha b],[b, a+b]]) :
/// a^2 + ab + alpha b^2 = 1 } of order q+1; first (a, b) in canonical order
/// whose element has order q+1.
inline Collineation cyclic_group_generator(const Plane& plane, Fe alpha) {
  const Field& F = plane.field();
  detail::require_even(F);
  const std::uint64_t order = std::uint64_t{F.q()} + 1;
  const auto factors = erpg::detail::prime_factors(order);
  const auto id = identity_collineation(F);
  auto power = [&](const Collineation& m, std::uint64_t e) {
    Collineation r = id, b = m;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = compose(F, r, b);
      b = compose(F, b, b);
    }
    return r;
  };
  for (std::uint32_t av = 0; av < F.q(); ++av) {
    for (std::uint32_t bv = 0; bv < F.q(); ++bv) {
      const Fe a{av}, b{bv};
      if (F.add(F.add(F.square(a), F.mul(a, b)), F.mul(alpha, F.square(b))) != F.one()) continue;
      const auto m = make_collineation(
          F, {F.one(), F.zero(), F.zero(), F.zero(), a, F.mul(alpha, b), F.zero(), b, F.add(a, b)});
      if (power(m, order) != id) continue;
      if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) { return power(m, order / r) != id; })) {
        return m;
      }
    }
  }
  throw std::logic_error("no element of order q+1 in the pencil group");
}

struct TriangleFreeSet {
  std::uint32_t q = 0;
  Fe lambda;
  Fe alpha;
  std::vector<std::uint32_t> points;  // sorted
};

/// First nonzero element of trace 0 (q >= 4).
inline Fe default_triangle_free_lambda(const Field& F) {
  detail::require_even(F);
  for (std::uint32_t v = 1; v < F.q(); ++v) {
    if (F.abs_trace(Fe{v}) == 0) return Fe{v};
  }
  throw Error(ErrorCode::NoValidLambda, "no nonzero trace-zero element for q = " + std::to_string(F.q()));
}

/// Points off X1 = 0 whose polar line is secant to C_{lambda^2}.
inline TriangleFreeSet triangle_free_set(const Plane& plane, std::optional<Fe> lambda = std::nullopt) {
  const Field& F = plane.field();
  detail::require_even(F);
  TriangleFreeSet S;
  S.q = F.q();
  S.alpha = pencil_alpha(F);
  S.lambda = lambda ? *lambda : default_triangle_free_lambda(F);
  if (S.lambda == F.zero() || F.abs_trace(S.lambda) != 0) {
    throw Error(ErrorCode::NoValidLambda, "lambda must be nonzero with trace 0");
  }
  const Polarity pol(plane);
  const auto conic = pencil_conic(plane, S.alpha, F.square(S.lambda));
  const auto in = detail::membership(plane.size(), conic);
  for (std::uint32_t v = 1 + F.q(); v < plane.size(); ++v) {
    if (polar_hits(pol, plane.point(v), in) == 2) S.points.push_back(v);
  }
  return S;
}

/// Closed-form membership test for R = (1, y, x):
/// Tr(alpha lambda^2 x^2 + lambda^2 y^2 + lambda^4 x^2 y^2) = 1.
inline bool triangle_free_trace_criterion(const Field& F, Fe alpha, Fe lambda, Fe y, Fe x) {
  const Fe l2 = F.square(lambda), x2 = F.square(x), y2 = F.square(y);
  const Fe t = F.add(F.add(F.mul(alpha, F.mul(l2, x2)), F.mul(l2, y2)), F.mul(F.square(l2), F.mul(x2, y2)));
  return F.abs_trace(t) == 1;
}

struct TriangleFreeReport {
  std::uint64_t size = 0;
  std::uint64_t claimed_size = 0;
  std::uint64_t triangles = 0;
  bool regular = false;  // every degree equals q/2
  std::optional<std::uint32_t> girth;
  bool no_absolute = false;
  bool cyclic_invariant = false;

  bool ok() const {
    return size == claimed_size && triangles == 0 && regular && (!girth || *girth >= 5) && no_absolute &&
           cyclic_invariant;
  }
};

inline TriangleFreeReport verify_triangle_free(const Plane& plane, const Graph& er, const TriangleFreeSet& S) {
  const Polarity pol(plane);
  TriangleFreeReport r;
  r.size = S.points.size();
  r.claimed_size = std::uint64_t{S.q} * (S.q + 1) / 2;
  const Graph sub = induced(er, S.points);
  r.triangles = triangle_count(sub);
  r.regular = is_regular(sub, S.q / 2);
  r.girth = girth(sub);
  r.no_absolute = std::none_of(S.points.begin(), S.points.end(),
                               [&](std::uint32_t v) { return pol.is_absolute(plane.point(v)); });
  const auto gen = cyclic_group_generator(plane, S.alpha);
  r.cyclic_invariant = std::all_of(S.points.begin(), S.points.end(), [&](std::uint32_t v) {
    return std::binary_search(S.points.begin(), S.points.end(), plane.apply(gen, v));
  });
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch.

/// Construction used for q when none is requested.
inline ConstructionId auto_construction(std::uint32_t q) {
  auto pp = erpg::detail::prime_power(q);
  if (!pp) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  const auto [p, n] = *pp;
  if (p == 2) {
    if (n % 2 == 0) return ConstructionId::even_sq_subfield_arc;
    if (n >= 3) return ConstructionId::even_arc;
    throw Error(ErrorCode::NotOddPower, "no coclique construction for q = 2");
  }
  if (n % 2 != 0) throw Error(ErrorCode::NotOddSquare, "no construction for odd non-square q");
  const auto s = *erpg::detail::exact_sqrt(q);
  return s % 4 == 3 ? ConstructionId::odd_sq_neg : ConstructionId::odd_sq_pos;
}

/// Builds and verifies a coclique construction (not triangle_free).
inline CocliqueCertificate build_coclique(const Plane& plane, const Graph& er, ConstructionId id) {
  switch (id) {
    case ConstructionId::odd_sq_neg: return coclique_odd_sq_neg(plane, er);
    case ConstructionId::odd_sq_pos: return coclique_odd_sq_pos(plane, er);
    case ConstructionId::even_arc: return coclique_even(plane, er).certificate;
    case ConstructionId::even_sq_subfield_arc: return coclique_even_square(plane, er).certificate;
    case ConstructionId::triangle_free: break;
  }
  throw std::invalid_argument("triangle_free is not a coclique construction");
}

}  // namespace erpg
