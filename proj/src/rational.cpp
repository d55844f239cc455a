#include "o2n/rational.hpp"

#include "o2n/error.hpp"

namespace o2n {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
  auto digits = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!digits(num, true) || (slash != std::string_view::npos && !digits(den, false)))
    throw ParseError("malformed rational '" + std::string(s) + "'");
  Rational r;
  r.get_num() = Integer(std::string(num));
  r.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

}  // namespace o2n
