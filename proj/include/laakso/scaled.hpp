// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace laakso {

/// A quantity value * 4^{-unit_exponent}, kept in exact integer arithmetic.
///
/// Every distance in the toolkit is a multiple of the edge length 4^{-k} of
/// some level-k graph, so all comparisons and sums are exact once operands
/// are brought to a common exponent. Signed values are allowed; difference
/// evaluations use them.
struct ScaledDistance {
  std::int64_t value = 0;
  std::int32_t unit_exponent = 0;

  static constexpr std::int64_t pow4(std::int32_t k) {
    assert(k >= 0 && k <= 30);
    return std::int64_t{1} << (2 * k);
  }

  static constexpr ScaledDistance units(std::int64_t v, std::int32_t k) { return {v, k}; }
  static constexpr ScaledDistance zero() { return {0, 0}; }

  /// Express the same quantity with a finer unit. Exact; requires k >= unit_exponent.
  ScaledDistance rescaled_to(std::int32_t k) const {
    if (k < unit_exponent) throw std::invalid_argument("rescaled_to: coarser unit requested");
    return {value * pow4(k - unit_exponent), k};
  }

  /// Canonical form: strip factors of 4 into the exponent; zero is {0, 0}.
  ScaledDistance normalized() const {
    ScaledDistance r = *this;
    if (r.value == 0) return {0, 0};
    while (r.unit_exponent > 0 && r.value % 4 == 0) {
      r.value /= 4;
      --r.unit_exponent;
    }
    return r;
  }

  double to_double() const {
    double p = 1.0;
    for (std::int32_t i = 0; i < unit_exponent; ++i) p *= 4.0;
    return static_cast<double>(value) / p;
  }

  ScaledDistance abs() const { return {value < 0 ? -value : value, unit_exponent}; }

  friend ScaledDistance operator+(ScaledDistance a, ScaledDistance b) {
    std::int32_t k = a.unit_exponent > b.unit_exponent ? a.unit_exponent : b.unit_exponent;
    return {a.rescaled_to(k).value + b.rescaled_to(k).value, k};
  }
  friend ScaledDistance operator-(ScaledDistance a, ScaledDistance b) {
    std::int32_t k = a.unit_exponent > b.unit_exponent ? a.unit_exponent : b.unit_exponent;
    return {a.rescaled_to(k).value - b.rescaled_to(k).value, k};
  }

  friend bool operator==(ScaledDistance a, ScaledDistance b) {
    std::int32_t k = a.unit_exponent > b.unit_exponent ? a.unit_exponent : b.unit_exponent;
    return a.rescaled_to(k).value == b.rescaled_to(k).value;
  }
  friend std::strong_ordering operator<=>(ScaledDistance a, ScaledDistance b) {
    std::int32_t k = a.unit_exponent > b.unit_exponent ? a.unit_exponent : b.unit_exponent;
    return a.rescaled_to(k).value <=> b.rescaled_to(k).value;
  }
};

}  // namespace laakso
