#include "o2n/half_int.hpp"

#include <charconv>
#include <limits>

#include "o2n/error.hpp"

namespace o2n {

namespace {
// Keeps sums of a few hundred entries far from int64 overflow.
constexpr std::int64_t kMagnitudeLimit = std::int64_t{1} << 40;

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw ParseError("malformed half-integer '" + std::string(whole) + "'");
  return v;
}
}  // namespace

Rational HalfInt::to_rational() const { return make_rational(twice, 2); }

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInt parse_half_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::string_view whole = s;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t twice;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    std::int64_t v = parse_int(s, whole);
    if (v > kMagnitudeLimit || v < -kMagnitudeLimit) throw ParseError("value out of range: " + std::string(whole));
    twice = 2 * v;
  } else {
    std::int64_t num = parse_int(s.substr(0, slash), whole);
    std::int64_t den = parse_int(s.substr(slash + 1), whole);
    if (den == 1) {
      twice = 2 * num;
    } else if (den == 2) {
      twice = num;
    } else {
      throw ParseError("'" + std::string(whole) + "' is not an integer or half-integer");
    }
  }
  if (twice > 2 * kMagnitudeLimit || twice < -2 * kMagnitudeLimit)
    throw ParseError("value out of range: " + std::string(whole));
  return HalfInt{twice};
}

}  // namespace o2n
