#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "o2n/rational.hpp"

namespace o2n {

// A value in (1/2)Z, stored doubled so parity tests stay integral.
struct HalfInt {
  std::int64_t twice = 0;

  static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  Rational to_rational() const;
  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt{-twice}; }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
  constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }
  constexpr auto operator<=>(const HalfInt&) const = default;
};

constexpr HalfInt abs(HalfInt h) { return h.twice < 0 ? -h : h; }

// Accepts "3", "-2", "-1/2", "5/2". Anything else is a ParseError.
HalfInt parse_half_int(std::string_view s);

}  // namespace o2n
