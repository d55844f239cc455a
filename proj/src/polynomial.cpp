#include "o2n/polynomial.hpp"

#include <algorithm>

#include "o2n/error.hpp"

namespace o2n {

Polynomial::Polynomial(const Rational& c) {
  if (!o2n::is_zero(c)) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::u() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::linear(const Rational& c) { return Polynomial(std::vector<Rational>{c, 1}); }

void Polynomial::trim() {
  while (!c_.empty() && o2n::is_zero(c_.back())) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // Horner in the ring: p(u+c) = (...(a_d (u+c) + a_{d-1})(u+c) + ...) + a_0
  Polynomial lin = linear(c), acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  return *this * inv;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (o2n::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (o2n::is_zero(a)) continue;
    std::string coef = to_string(abs(a));
    if (!s.empty()) s += sgn(a) < 0 ? " - " : " + ";
    else if (sgn(a) < 0) s += "-";
    bool unit = (abs(a) == 1);
    if (i == 0) s += coef;
    else s += (unit ? "" : coef + "*") + (i == 1 ? std::string("u") : "u^" + std::to_string(i));
  }
  return s;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DegreeError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Polynomial{}, a};
  std::vector<Rational> q(dq + 1);
  Rational inv = 1 / b.leading();
  for (int i = dq; i >= 0; --i) {
    Rational t = rem[i + db] * inv;
    q[i] = t;
    if (o2n::is_zero(t)) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] -= t * b.coeffs()[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace o2n
