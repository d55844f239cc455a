#pragma once

#include <string>

#include "o2n/polynomial.hpp"

namespace o2n {

// num/den over Q[u], always reduced with a monic denominator; zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  // c / (u + a)
  static RationalFunction simple_pole(const Rational& c, const Rational& a);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_pole_at(const Rational& x) const { return o2n::is_zero(den_.eval(x)); }

  // f(u + c)
  RationalFunction shifted(const Rational& c) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void canonicalize();
  Polynomial num_, den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_scale(const RationalFunction& f, const Rational& s);
// Throws PoleError when the (reduced) denominator vanishes at x.
Rational rf_eval(const RationalFunction& f, const Rational& x);
// Coefficient of u^(-k) in the expansion of f at infinity.
// Throws DegreeError when f is unbounded there (deg num > deg den).
Rational rf_limit_coeff(const RationalFunction& f, int k);

}  // namespace o2n
