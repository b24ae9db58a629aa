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
 * @file pg.hpp
 * @brief The Desarguesian plane PG(2,q): points, lines, incidence and
 * collineations.
 *
 * Points and lines are homogeneous triples normalized so that the first
 * nonzero coordinate is 1. Both are numbered the same way:
 *
 *   (0,0,1) -> 0,   (0,1,z) -> 1 + z,   (1,y,z) -> 1 + q + y*q + z
 *
 * with y, z read as canonical field indices. Matrices act on column vectors
 * from the left; lines transform by the inverse transpose.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "erpg/error.hpp"
#include "erpg/gf.hpp"

namespace erpg {

using Triple = std::array<Fe, 3>;

inline constexpr std::uint32_t kMaxPlaneOrder = 1024;

struct Point {
  Triple x;
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

struct Line {
  Triple c;
  friend constexpr bool operator==(const Line&, const Line&) = default;
};

/// Invertible 3x3 matrix modulo scalars, row-major, first nonzero entry 1.
struct Collineation {
  std::array<Fe, 9> m;
  friend constexpr bool operator==(const Collineation&, const Collineation&) = default;

  Fe operator()(int row, int col) const { return m[static_cast<std::size_t>(3 * row + col)]; }
};

namespace detail {

inline Fe dot(const Field& F, const Triple& a, const Triple& b) {
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

inline Triple cross(const Field& F, const Triple& a, const Triple& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
          F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

inline Triple normalize(const Field& F, Triple t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] != F.zero()) {
      const Fe s = F.inv(t[i]);
      for (std::size_t j = i; j < 3; ++j) t[j] = F.mul(t[j], s);
      return t;
    }
  }
  throw Error(ErrorCode::SingularMatrix, "zero vector has no projective point");
}

inline Fe det3(const Field& F, const std::array<Fe, 9>& m) {
  auto minor = [&](int a, int b, int c, int d) { return F.sub(F.mul(m[a], m[d]), F.mul(m[b], m[c])); };
  Fe t = F.mul(m[0], minor(4, 5, 7, 8));
  t = F.sub(t, F.mul(m[1], minor(3, 5, 6, 8)));
  return F.add(t, F.mul(m[2], minor(3, 4, 6, 7)));
}

inline Triple mat_vec(const Field& F, const std::array<Fe, 9>& m, const Triple& v) {
  Triple r;
  for (int i = 0; i < 3; ++i) {
    r[static_cast<std::size_t>(i)] = dot(F, {m[3 * i], m[3 * i + 1], m[3 * i + 2]}, v);
  }
  return r;
}

}  // namespace detail

/// Validates and normalizes a 3x3 matrix into a collineation.
inline Collineation make_collineation(const Field& F, std::array<Fe, 9> m) {
  if (detail::det3(F, m) == F.zero()) throw Error(ErrorCode::SingularMatrix, "determinant is zero");
  for (std::size_t i = 0; i < 9; ++i) {
    if (m[i] != F.zero()) {
      const Fe s = F.inv(m[i]);
      for (auto& e : m) e = F.mul(e, s);
      break;
    }
  }
  return Collineation{m};
}

inline Collineation identity_collineation(const Field& F) {
  return Collineation{{F.one(), F.zero(), F.zero(), F.zero(), F.one(), F.zero(), F.zero(), F.zero(), F.one()}};
}

inline Collineation compose(const Field& F, const Collineation& a, const Collineation& b) {
  std::array<Fe, 9> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Fe s = F.zero();
      for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(a(i, k), b(k, j)));
      r[static_cast<std::size_t>(3 * i + j)] = s;
    }
  }
  return make_collineation(F, r);
}

/// Adjugate, i.e. the inverse up to a scalar.
inline Collineation inverse(const Field& F, const Collineation& a) {
  std::array<Fe, 9> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[static_cast<std::size_t>(3 * i + j)] = F.sub(F.mul(a(r0, c0), a(r1, c1)), F.mul(a(r0, c1), a(r1, c0)));
    }
  }
  return make_collineation(F, r);
}

/**
 * @brief Lift of a 2x2 matrix [[a,b],[c,d]] to PGL(3,q).
 *
 * q odd: the conic stabilizer lift
 *   ( a^2  2ac   c^2 )
 *   ( ab   ad+bc cd  )
 *   ( b^2  2bd   d^2 ),
 * which fixes X2^2 - X1X3 = 0. The lift reverses products:
 * lift(A) lift(B) = lift(B A) up to a scalar.
 *
 * q even: diag(1, [[a,b],[c,d]]) scaled so that ad + bc = 1, which
 * commutes with the pseudo polarity.
 */
inline Collineation pgl2_lift(const Field& F, Fe a, Fe b, Fe c, Fe d) {
  const Fe det = F.sub(F.mul(a, d), F.mul(b, c));
  if (det == F.zero()) throw Error(ErrorCode::Degenerate2x2, "ad - bc = 0");
  if (F.is_even()) {
    const Fe s = F.inv(*F.square_root(det));
    return make_collineation(F, {F.one(), F.zero(), F.zero(), F.zero(), F.mul(a, s), F.mul(b, s), F.zero(),
                                 F.mul(c, s), F.mul(d, s)});
  }
  const Fe two = F.from_int(2);
  return make_collineation(
      F, {F.square(a), F.mul(two, F.mul(a, c)), F.square(c), F.mul(a, b), F.add(F.mul(a, d), F.mul(b, c)),
          F.mul(c, d), F.square(b), F.mul(two, F.mul(b, d)), F.square(d)});
}

/**
 * @brief PG(2,q) over a fixed field, with the canonical point enumeration
 * cached.
 */
class Plane {
 public:
  explicit Plane(FieldPtr field) : field_(std::move(field)) {
    const Field& F = *field_;
    const std::uint32_t q = F.q();
    if (q > kMaxPlaneOrder) throw Error(ErrorCode::TooLarge, "PG(2,q) is only enumerated for q <= 1024");
    points_.reserve(size());
    points_.push_back(Point{{F.zero(), F.zero(), F.one()}});
    for (std::uint32_t z = 0; z < q; ++z) points_.push_back(Point{{F.zero(), F.one(), Fe{z}}});
    for (std::uint32_t y = 0; y < q; ++y)
      for (std::uint32_t z = 0; z < q; ++z) points_.push_back(Point{{F.one(), Fe{y}, Fe{z}}});
  }

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_->q(); }

  /// Number of points (= number of lines).
  std::uint32_t size() const noexcept {
    const std::uint32_t q = field_->q();
    return q * q + q + 1;
  }

  const std::vector<Point>& points() const noexcept { return points_; }

  const Point& point(std::uint32_t index) const {
    if (index >= points_.size()) throw Error(ErrorCode::VertexOutOfRange, "point index out of range");
    return points_[index];
  }

  Point normalize(const Triple& t) const { return Point{detail::normalize(*field_, t)}; }
  Line normalize_line(const Triple& t) const { return Line{detail::normalize(*field_, t)}; }

  std::uint32_t index_of(const Point& p) const { return triple_index(p.x); }
  std::uint32_t index_of(const Line& l) const { return triple_index(l.c); }

  Line line(std::uint32_t index) const { return Line{point(index).x}; }

  bool incident(const Point& p, const Line& l) const {
    return detail::dot(*field_, p.x, l.c) == field_->zero();
  }

  /// Line through two distinct points.
  Line join(const Point& a, const Point& b) const { return normalize_line(detail::cross(*field_, a.x, b.x)); }
  /// Intersection of two distinct lines.
  Point meet(const Line& a, const Line& b) const { return normalize(detail::cross(*field_, a.c, b.c)); }

  /// Indices of the q+1 points on a line, in increasing order.
  std::vector<std::uint32_t> points_on(const Line& l) const {
    const Field& F = *field_;
    const auto [a, b, c] = l.c;
    std::vector<std::uint32_t> out;
    out.reserve(q() + 1);
    // Points (0,0,1) and (0,1,z).
    if (c == F.zero()) out.push_back(0);
    if (c == F.zero()) {
      if (b == F.zero()) {
        for (std::uint32_t z = 0; z < q(); ++z) out.push_back(1 + z);
      }
    } else {
      out.push_back(1 + F.neg(F.div(b, c)).v);
    }
    // Points (1,y,z): a + b y + c z = 0.
    for (std::uint32_t y = 0; y < q(); ++y) {
      const Fe r = F.add(a, F.mul(b, Fe{y}));
      if (c != F.zero()) {
        out.push_back(1 + q() + y * q() + F.neg(F.div(r, c)).v);
      } else if (r == F.zero()) {
        for (std::uint32_t z = 0; z < q(); ++z) out.push_back(1 + q() + y * q() + z);
      }
    }
    return out;
  }

  Point apply(const Collineation& M, const Point& p) const {
    return normalize(detail::mat_vec(*field_, M.m, p.x));
  }

  std::uint32_t apply(const Collineation& M, std::uint32_t index) const { return index_of(apply(M, point(index))); }

  Line apply_to_line(const Collineation& M, const Line& l) const {
    const Collineation inv = inverse(*field_, M);
    std::array<Fe, 9> t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[static_cast<std::size_t>(3 * i + j)] = inv(j, i);
    return normalize_line(detail::mat_vec(*field_, t, l.c));
  }

  /// Membership in the standard Baer subplane PG(2, sqrt q).
  bool in_baer_subplane(const Point& p) const {
    const Field& F = *field_;
    if (!F.has_subfield()) throw Error(ErrorCode::OddDegree, "Baer subplane needs q square");
    const Point n = normalize(p.x);
    return F.in_subfield(n.x[0]) && F.in_subfield(n.x[1]) && F.in_subfield(n.x[2]);
  }

 private:
  std::uint32_t triple_index(const Triple& t) const {
    const Field& F = *field_;
    const std::uint32_t q = F.q();
    if (t[0] == F.one()) return 1 + q + t[1].v * q + t[2].v;
    if (t[0] == F.zero() && t[1] == F.one()) return 1 + t[2].v;
    if (t[0] == F.zero() && t[1] == F.zero() && t[2] == F.one()) return 0;
    throw Error(ErrorCode::ParseError, "triple is not normalized");
  }

  FieldPtr field_;
  std::vector<Point> points_;
};

/// Breadth-first closure of {start} under the generators, in discovery order.
inline std::vector<std::uint32_t> orbit(const Plane& plane, std::span<const Collineation> gens, std::uint32_t start) {
  std::vector<char> seen(plane.size(), 0);
  std::vector<std::uint32_t> out{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      const std::uint32_t img = plane.apply(g, out[head]);
      if (!seen[img]) {
        seen[img] = 1;
        out.push_back(img);
      }
    }
  }
  return out;
}

/// Partition of a generator-invariant point set into orbits, each listed from
/// its least point; orbits are ordered by their least point.
inline std::vector<std::vector<std::uint32_t>> orbits(const Plane& plane, std::span<const Collineation> gens,
                                                      std::span<const std::uint32_t> domain) {
  std::vector<char> done(plane.size(), 0);
  std::vector<std::uint32_t> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::uint32_t>> out;
  for (auto p : sorted) {
    if (done[p]) continue;
    auto o = orbit(plane, gens, p);
    for (auto x : o) done[x] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace erpg
