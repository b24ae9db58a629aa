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
 * @file bounds.hpp
 * @brief Known lower and upper bounds on alpha(ER_q) by class of q.
 *
 * Upper:  q^{3/2} + sqrt q + 1 for every q, and q^{3/2} - q + sqrt q + 1
 *         when q is an even square.
 * Lower (earlier results):
 *   odd square        (q^{3/2} + q + 2)/2
 *   odd non-square    120 q^{3/2} / (73 sqrt 73)
 *   even square       q^{3/2} - q + sqrt q
 *   even non-square   q^{3/2} / (2 sqrt 2)
 * Lower (constructed here):
 *   odd square, sqrt q = 3 mod 4   (q^{3/2} - sqrt q)/2 + q + 1
 *   odd square, sqrt q = 1 mod 4   (q^{3/2} + q)/2 + q + 1
 *   even non-square                q^{3/2}/sqrt 2 - q + sqrt(q/2)
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "erpg/error.hpp"
#include "erpg/gf.hpp"

namespace erpg {

enum class FieldClass { odd_square, odd_nonsquare, even_square, even_nonsquare };

constexpr std::string_view to_string(FieldClass c) {
  switch (c) {
    case FieldClass::odd_square: return "odd square";
    case FieldClass::odd_nonsquare: return "odd non-square";
    case FieldClass::even_square: return "even square";
    case FieldClass::even_nonsquare: return "even non-square";
  }
  return "?";
}

inline FieldClass classify_order(std::uint64_t q) {
  const auto pp = detail::prime_power(q);
  if (!pp) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  const bool square = pp->second % 2 == 0;
  if (pp->first == 2) return square ? FieldClass::even_square : FieldClass::even_nonsquare;
  return square ? FieldClass::odd_square : FieldClass::odd_nonsquare;
}

/// Real-valued bounds together with the integers they imply for alpha.
struct AlphaBounds {
  std::uint64_t q = 0;
  FieldClass cls = FieldClass::odd_square;
  double upper = 0.0;
  double prior_lower = 0.0;
  std::optional<double> new_lower;

  double best_lower() const { return new_lower && *new_lower > prior_lower ? *new_lower : prior_lower; }
  /// Largest integer <= upper.
  std::uint64_t upper_int() const { return static_cast<std::uint64_t>(std::floor(upper + 1e-9)); }
  /// Smallest integer >= a lower bound.
  static std::uint64_t ceil_int(double x) { return static_cast<std::uint64_t>(std::ceil(x - 1e-9)); }
  std::uint64_t prior_lower_int() const { return ceil_int(prior_lower); }
  std::optional<std::uint64_t> new_lower_int() const {
    if (!new_lower) return std::nullopt;
    return ceil_int(*new_lower);
  }
  std::uint64_t best_lower_int() const { return ceil_int(best_lower()); }
};

inline AlphaBounds alpha_bounds(std::uint64_t q) {
  AlphaBounds b;
  b.q = q;
  b.cls = classify_order(q);
  const double qd = static_cast<double>(q);
  const double s = std::sqrt(qd);
  const double q32 = qd * s;
  b.upper = q32 + s + 1.0;
  switch (b.cls) {
    case FieldClass::odd_square: {
      b.prior_lower = (q32 + qd + 2.0) / 2.0;
      const auto r = *detail::exact_sqrt(q);
      b.new_lower = r % 4 == 3 ? (q32 - s) / 2.0 + qd + 1.0 : (q32 + qd) / 2.0 + qd + 1.0;
      break;
    }
    case FieldClass::odd_nonsquare:
      b.prior_lower = 120.0 * q32 / (73.0 * std::sqrt(73.0));
      break;
    case FieldClass::even_square:
      b.upper = q32 - qd + s + 1.0;
      b.prior_lower = q32 - qd + s;
      break;
    case FieldClass::even_nonsquare:
      b.prior_lower = q32 / (2.0 * std::sqrt(2.0));
      b.new_lower = q32 / std::sqrt(2.0) - qd + std::sqrt(qd / 2.0);
      break;
  }
  return b;
}

}  // namespace erpg
