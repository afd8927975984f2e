#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hypermorse {

/// Exact value in (1/2)Z, stored as twice the value. Gromov products and
/// four-point defects of integer metrics always land here.
class HalfInteger {
public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_doubled(std::int64_t doubled) {
    HalfInteger h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInteger from_integer(std::int64_t value) { return from_doubled(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(doubled_) / 2.0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_doubled(doubled_ - o.doubled_); }
  constexpr HalfInteger operator-() const { return from_doubled(-doubled_); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  /// "3", "-1", "2.5"
  std::string to_string() const {
    std::string s = std::to_string(doubled_ / 2);
    if (doubled_ % 2 != 0) {
      if (doubled_ < 0 && doubled_ / 2 == 0) s = "-0";
      s += ".5";
    }
    return s;
  }

private:
  std::int64_t doubled_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.to_string(); }

} // namespace hypermorse
