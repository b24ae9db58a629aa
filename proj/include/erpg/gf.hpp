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
 * @file gf.hpp
 * @brief Finite fields GF(p^n) with a canonical representation.
 *
 * An element of GF(p^n) = GF(p)[x]/(f) is stored as the integer
 * sum_i c_i p^i of its coefficient vector (c_0, ..., c_{n-1}) with respect to
 * the power basis of the modulus f. Integer order on these values is the
 * canonical enumeration order of the field, so "the first element with
 * property X" is well defined and reproducible.
 *
 * The modulus is the least monic irreducible polynomial of degree n in the
 * same order (lower coefficients read as a base-p integer), e.g. x^3 + x + 1
 * for GF(8) and x^2 + 1 for GF(9).
 *
 * Multiplication goes through exp/log tables over a primitive element, and
 * addition in odd characteristic through a Zech logarithm table, so every
 * operation is O(1) after construction.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "erpg/error.hpp"

namespace erpg {

/// Field element: the canonical index of an element inside its Field.
struct Fe {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns (p, n) with q = p^n, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  std::uint32_t n = 0;
  for (std::uint64_t r = q; r > 1; r /= f[0]) ++n;
  return std::make_pair(static_cast<std::uint32_t>(f[0]), n);
}

/// Integer square root if exact.
inline std::optional<std::uint64_t> exact_sqrt(std::uint64_t q) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= q) ++r;
  if (r * r == q) return r;
  return std::nullopt;
}

// Polynomials over GF(p), low-degree coefficient first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo a nonzero b.
inline Poly poly_rem(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `code`.
inline Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  if (degree <= 1) return degree == 1;
  for (std::uint32_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_rem(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/**
 * @brief GF(p^n) context. Immutable after construction and safe to share
 * between threads.
 *
 * Create with make_field(); elements are only meaningful together with the
 * context that produced them.
 */
class Field {
  struct Private {};

 public:
  Field(Private, std::uint32_t p, std::uint32_t n);

  static FieldPtr make(std::uint32_t p, std::uint32_t n) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    if (n == 0) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) {
        throw Error(ErrorCode::TooLarge, "field order exceeds 2^20");
      }
    }
    return std::make_shared<const Field>(Private{}, p, n);
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_even() const noexcept { return p_ == 2; }
  /// Modulus coefficients, low degree first, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Fe zero() const noexcept { return Fe{0}; }
  Fe one() const noexcept { return Fe{1}; }
  Fe generator() const noexcept { return exp_[1 % exp_.size()]; }

  /// Element with canonical index `index`.
  Fe element(std::uint32_t index) const {
    if (index >= q_) throw Error(ErrorCode::VertexOutOfRange, "element index out of range");
    return Fe{index};
  }

  /// Image of an integer in the prime subfield.
  Fe from_int(std::int64_t k) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    return Fe{static_cast<std::uint32_t>(((k % p) + p) % p)};
  }

  std::vector<std::uint32_t> coefficients(Fe a) const {
    std::vector<std::uint32_t> c(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      c[i] = a.v % p_;
      a.v /= p_;
    }
    return c;
  }

  Fe from_coefficients(std::span<const std::uint32_t> c) const {
    if (c.size() != n_) throw Error(ErrorCode::ParseError, "coefficient vector has wrong length");
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= p_) throw Error(ErrorCode::ParseError, "coefficient not reduced mod p");
      v = v * p_ + c[i];
    }
    return Fe{v};
  }

  Fe add(Fe a, Fe b) const noexcept {
    if (p_ == 2) return Fe{a.v ^ b.v};
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t la = log_[a.v];
    std::uint32_t k = log_[b.v] + (q_ - 1) - la;
    if (k >= q_ - 1) k -= q_ - 1;
    const std::uint32_t z = zech_[k];
    if (z == kNoLog) return Fe{0};
    return exp_[la + z];
  }

  Fe neg(Fe a) const noexcept {
    if (p_ == 2 || a.v == 0) return a;
    return exp_[log_[a.v] + (q_ - 1) / 2];
  }

  Fe sub(Fe a, Fe b) const noexcept { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const noexcept {
    if (a.v == 0 || b.v == 0) return Fe{0};
    return exp_[log_[a.v] + log_[b.v]];
  }

  Fe square(Fe a) const noexcept { return mul(a, a); }

  Fe inv(Fe a) const {
    if (a.v == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t la = log_[a.v];
    return exp_[la == 0 ? 0 : (q_ - 1) - la];
  }

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  /// Square-and-multiply; pow(a, 0) = 1 for every a.
  Fe pow(Fe a, std::uint64_t e) const noexcept {
    Fe result = one();
    Fe base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// True iff a = t^2 for some t. Every element is a square when q is even.
  bool is_square(Fe a) const noexcept {
    if (p_ == 2 || a.v == 0) return true;
    return pow(a, (q_ - 1) / 2) == one();
  }

  /// Some t with t^2 = a, or nullopt when a is a non-square.
  std::optional<Fe> square_root(Fe a) const noexcept {
    if (a.v == 0) return a;
    if (p_ == 2) return pow(a, q_ / 2);
    const std::uint32_t la = log_[a.v];
    if (la % 2 != 0) return std::nullopt;
    return exp_[la / 2];
  }

  /// Absolute trace to GF(2): a + a^2 + ... + a^(2^(n-1)).
  std::uint32_t abs_trace(Fe a) const {
    if (p_ != 2) throw Error(ErrorCode::OddCharacteristic, "absolute trace needs q even");
    Fe t = zero();
    Fe x = a;
    for (std::uint32_t i = 0; i < n_; ++i) {
      t = add(t, x);
      x = square(x);
    }
    return t.v;
  }

  /// First non-square in canonical order (q odd).
  Fe find_nonsquare() const {
    if (p_ == 2) throw Error(ErrorCode::EvenCharacteristic, "no non-squares when q is even");
    for (std::uint32_t v = 1; v < q_; ++v) {
      if (!is_square(Fe{v})) return Fe{v};
    }
    throw std::logic_error("odd field without non-squares");
  }

  /// First element of absolute trace 1 in canonical order (q even).
  Fe find_trace_one() const {
    for (std::uint32_t v = 1; v < q_; ++v) {
      if (abs_trace(Fe{v}) == 1) return Fe{v};
    }
    throw std::logic_error("trace map is identically zero");
  }

  // Subfield GF(sqrt q) for even n.

  bool has_subfield() const noexcept { return n_ % 2 == 0; }

  const Field& subfield() const {
    require_even_degree();
    return *subfield_;
  }

  FieldPtr subfield_ptr() const {
    require_even_degree();
    return subfield_;
  }

  std::uint32_t sqrt_q() const {
    require_even_degree();
    return subfield_->q();
  }

  /// Ring embedding GF(sqrt q) -> GF(q).
  Fe embed(Fe sub) const {
    require_even_degree();
    if (sub.v >= embed_.size()) throw Error(ErrorCode::NotInSubfield, "subfield index out of range");
    return embed_[sub.v];
  }

  bool in_subfield(Fe a) const {
    require_even_degree();
    return restrict_[a.v] != kNoLog;
  }

  /// Inverse of embed().
  Fe to_subfield(Fe a) const {
    require_even_degree();
    if (restrict_[a.v] == kNoLog) throw Error(ErrorCode::NotInSubfield, "element not in subfield");
    return Fe{restrict_[a.v]};
  }

  /// a^(sqrt q + 1), expressed in subfield coordinates.
  Fe norm_to_subfield(Fe a) const {
    require_even_degree();
    return to_subfield(pow(a, subfield_->q() + 1));
  }

  /// Polynomial value written as "c0 + c1 x + ..." (debug helper).
  std::string to_string(Fe a) const {
    if (n_ == 1) return std::to_string(a.v);
    std::string s = "[";
    auto c = coefficients(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + "]";
  }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  void require_even_degree() const {
    if (n_ % 2 != 0) throw Error(ErrorCode::OddDegree, "field has no subfield of index 2");
  }

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  // Schoolbook product modulo the modulus, used only while building tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) {
      std::uint64_t r = 0;
      for (std::uint32_t i = 0; i < n_; ++i) {
        if ((b >> i) & 1) r ^= std::uint64_t{a} << i;
      }
      std::uint64_t mod = 0;
      for (std::uint32_t i = 0; i <= n_; ++i) mod |= std::uint64_t{modulus_[i]} << i;
      for (std::uint32_t d = 2 * n_; d-- > n_;) {
        if ((r >> d) & 1) r ^= mod << (d - n_);
      }
      return static_cast<std::uint32_t>(r);
    }
    std::vector<std::uint64_t> prod(2 * n_, 0);
    auto ca = coefficients(Fe{a});
    auto cb = coefficients(Fe{b});
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    for (std::uint32_t d = 2 * n_ - 1; d >= n_ && d < 2 * n_; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= n_; ++i) {
        prod[d - n_ + i] = (prod[d - n_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    std::uint32_t v = 0;
    for (std::uint32_t i = n_; i-- > 0;) v = v * p_ + static_cast<std::uint32_t>(prod[i]);
    return v;
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Fe> exp_;              // size 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::uint32_t> zech_;  // odd p: log(1 + g^k), kNoLog when 1 + g^k = 0
  FieldPtr subfield_;
  std::vector<Fe> embed_;
  std::vector<std::uint32_t> restrict_;
};

inline Field::Field(Private, std::uint32_t p, std::uint32_t n) : p_(p), n_(n), q_(1) {
  for (std::uint32_t i = 0; i < n; ++i) q_ *= p;

  // Least monic irreducible modulus.
  std::uint64_t codes = q_;
  bool found = false;
  for (std::uint64_t code = 0; code < codes; ++code) {
    auto f = detail::monic_from_code(code, n, p);
    if (detail::is_irreducible(f, p)) {
      modulus_ = std::move(f);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");

  // Primitive element: g^((q-1)/r) != 1 for every prime r | q-1.
  const auto order = q_ - 1;
  const auto factors = detail::prime_factors(order);
  std::uint32_t g = 1;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  exp_.resize(2 * static_cast<std::size_t>(order));
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = Fe{x};
    exp_[i + order] = Fe{x};
    log_[x] = i;
    x = slow_mul(x, g);
  }

  if (p_ != 2) {
    zech_.resize(order);
    for (std::uint32_t k = 0; k < order; ++k) {
      const std::uint32_t s = digit_add(1, exp_[k].v);
      zech_[k] = s == 0 ? kNoLog : log_[s];
    }
  }

  if (n_ % 2 == 0) {
    subfield_ = Field::make(p_, n_ / 2);
    // Embed via the least root of the subfield modulus.
    const auto& m = subfield_->modulus();
    std::optional<Fe> root;
    for (std::uint32_t v = 0; v < q_ && !root; ++v) {
      Fe acc = zero();
      for (std::size_t i = m.size(); i-- > 0;) acc = add(mul(acc, Fe{v}), from_int(m[i]));
      if (acc == zero()) root = Fe{v};
    }
    if (!root) throw std::logic_error("subfield modulus has no root");
    embed_.resize(subfield_->q());
    restrict_.assign(q_, kNoLog);
    for (std::uint32_t s = 0; s < subfield_->q(); ++s) {
      auto c = subfield_->coefficients(Fe{s});
      Fe acc = zero();
      for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, *root), from_int(c[i]));
      embed_[s] = acc;
      restrict_[acc.v] = s;
    }
  }
}

/// GF(p^n) with the least monic irreducible modulus of degree n.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t n) { return Field::make(p, n); }

/// GF(q) for a prime power q.
inline FieldPtr make_field_of_order(std::uint64_t q) {
  auto pp = detail::prime_power(q);
  if (!pp) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) throw Error(ErrorCode::TooLarge, "field order exceeds 2^20");
  return make_field(pp->first, pp->second);
}

}  // namespace erpg
