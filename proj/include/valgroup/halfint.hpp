#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace valgroup {

/// Exact half-integer, stored as twice its value. Gromov products c(x,y)
/// land in (1/2)Z even when lengths are integers, so no rounding anywhere.
struct HalfInt {
  std::int64_t doubled = 0;

  static constexpr HalfInt of(std::int64_t whole) { return HalfInt{2 * whole}; }
  static constexpr HalfInt halves(std::int64_t d) { return HalfInt{d}; }

  constexpr bool is_integer() const { return doubled % 2 == 0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.doubled + b.doubled}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.doubled - b.doubled}; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;

  friend constexpr bool operator<(HalfInt a, std::int64_t w) { return a.doubled < 2 * w; }
  friend constexpr bool operator>(HalfInt a, std::int64_t w) { return a.doubled > 2 * w; }
  friend constexpr bool operator>=(HalfInt a, std::int64_t w) { return a.doubled >= 2 * w; }
  friend constexpr bool operator<=(HalfInt a, std::int64_t w) { return a.doubled <= 2 * w; }
  friend constexpr bool operator==(HalfInt a, std::int64_t w) { return a.doubled == 2 * w; }

  std::string str() const {
    if (is_integer()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
  }
};

constexpr HalfInt min(HalfInt a, HalfInt b) { return a.doubled < b.doubled ? a : b; }

}  // namespace valgroup
