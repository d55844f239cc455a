#include "o2n/rational_function.hpp"

#include <stdexcept>

#include "o2n/error.hpp"

namespace o2n {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::simple_pole(const Rational& c, const Rational& a) {
  return RationalFunction(Polynomial(c), Polynomial::linear(a));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::shifted(const Rational& c) const {
  RationalFunction r;
  r.num_ = num_.shifted(c);
  r.den_ = den_.shifted(c);
  return r;  // a shift preserves coprimality and the leading coefficient
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g) { return f + g; }

RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g) { return f * g; }

RationalFunction rf_scale(const RationalFunction& f, const Rational& s) { return f * RationalFunction(s); }

Rational rf_eval(const RationalFunction& f, const Rational& x) {
  Rational d = f.den().eval(x);
  if (is_zero(d)) throw PoleError("pole of " + f.str() + " at u=" + to_string(x));
  return f.num().eval(x) / d;
}

Rational rf_limit_coeff(const RationalFunction& f, int k) {
  if (k < 0) throw std::invalid_argument("rf_limit_coeff: k must be >= 0");
  if (f.is_zero()) return 0;
  const int a = f.num().degree(), b = f.den().degree();
  if (a > b) throw DegreeError("no expansion at infinity: " + f.str() + " grows like u^" + std::to_string(a - b));
  // With w = 1/u: f = w^(b-a) * Nrev(w) / Drev(w), Drev(0) = lead(den) != 0.
  const int m = k - (b - a);
  if (m < 0) return 0;
  std::vector<Rational> s(m + 1);
  const Rational d0 = f.den().coeff(b);
  for (int i = 0; i <= m; ++i) {
    Rational acc = f.num().coeff(a - i);
    for (int j = 1; j <= i; ++j) acc -= f.den().coeff(b - j) * s[i - j];
    s[i] = acc / d0;
  }
  return s[m];
}

}  // namespace o2n
