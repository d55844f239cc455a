#include "o2n/coefficients.hpp"

#include <optional>

#include "o2n/error.hpp"

namespace o2n {

namespace {

Rational q(HalfInt h) { return h.to_rational(); }

using D = Pattern::Delta;

// sum_j sum_m B_kj(x) B_{k-1,m}(x) zeta_{base + d'_{k-1,j} + d'_{k-2,m}}
void add_double_sum(LinComb& out, const Pattern& p, int k, const Rational& x, D base) {
  for (int j = 1; j <= k - 1; ++j) {
    Rational bj = coeff_B(p, k, j, x);
    for (int m = 1; m <= k - 2; ++m)
      out.add(p.shifted({D{true, k - 1, j, 1}, base, D{true, k - 2, m, 1}}), bj * coeff_B(p, k - 1, m, x));
  }
}

void add_sum_j(LinComb& out, const Pattern& p, int k, const Rational& x, D base) {
  for (int j = 1; j <= k - 1; ++j) out.add(p.shifted({D{true, k - 1, j, 1}, base}), coeff_B(p, k, j, x));
}

void add_sum_m(LinComb& out, const Pattern& p, int k, const Rational& x, D base) {
  for (int m = 1; m <= k - 2; ++m) out.add(p.shifted({base, D{true, k - 2, m, 1}}), coeff_B(p, k - 1, m, x));
}

// Comparisons against lam_{k-2,1}, which is -infinity when k = 2.
struct Guard {
  HalfInt a, b;
  std::optional<HalfInt> c;
  bool a_lt_c() const { return c && a < *c; }
  bool a_le_c() const { return c && a <= *c; }
  bool a_ge_c() const { return !c || a >= *c; }
  bool a_gt_c() const { return !c || a > *c; }
};

Guard guard(const Pattern& p, int k) {
  Guard g{p.lam(k - 1, 1), p.lam(k, 1), std::nullopt};
  if (k > 2) g.c = p.lam(k - 2, 1);
  return g;
}

void check_args(const Pattern& p, int k, int i) {
  if (k < 2 || k > p.n() || i < 1 || i > k - 1)
    throw std::out_of_range("coefficient index (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")");
}

}  // namespace

void LinComb::add(const Pattern& p, const Rational& c) {
  if (is_zero(c) || !validate(p)) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->first == p) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(p, c);
}

Rational coeff_A(const Pattern& p, int k, int i) {
  check_args(p, k, i);
  Rational li = q(p.l(k - 1, i)), r = 1;
  for (int a = 1; a <= k - 1; ++a) {
    if (a == i) continue;
    Rational la = q(p.l(k - 1, a));
    Rational f = li * li - la * la;
    if (is_zero(f))
      throw DegenerateDenominator("A_" + std::to_string(k) + std::to_string(i) + " vanishing factor at " + p.str());
    r /= f;
  }
  return r;
}

Rational coeff_B(const Pattern& p, int k, int j, const Rational& x) {
  check_args(p, k, j);
  Rational lj = q(p.lp(k - 1, j)), r = 1;
  for (int a = 1; a <= k - 1; ++a) {
    if (a == j) continue;
    Rational la = q(p.lp(k - 1, a));
    if (la == lj)
      throw DegenerateDenominator("B_" + std::to_string(k) + std::to_string(j) + " vanishing factor at " + p.str());
    r *= (x + la) * (x - la + 1) / (la - lj);
  }
  return r;
}

Rational coeff_C(const Pattern& p, int k, int i) {
  check_args(p, k, i);
  Rational lpi = q(p.lp(k - 1, i));
  Rational hi = q(std::max(p.lam(k, 1), p.lam(k - 1, 1)));
  Rational lo = q(std::min(p.lam(k, 1), p.lam(k - 1, 1)));
  Rational r = (hi + lpi - 1) * (lo - lpi + 1);
  for (int a = 2; a <= k; ++a) r *= q(p.l(k, a)) - lpi + 1;
  for (int a = 2; a <= k - 1; ++a) r *= q(p.l(k - 1, a)) - lpi + 1;
  for (int a = 1; a <= k - 1; ++a) {
    if (a == i) continue;
    Rational d = q(p.lp(k - 1, a)) - lpi;
    if (is_zero(d))
      throw DegenerateDenominator("C_" + std::to_string(k) + std::to_string(i) + " vanishing factor at " + p.str());
    r /= d;
  }
  return r;
}

LinComb zeta_plus(const Pattern& p, int k, int i) {
  check_args(p, k, i);
  LinComb out;
  const Rational x = q(p.l(k - 1, i));
  const D up{false, k - 1, i, 1};
  if (i >= 2) {
    add_double_sum(out, p, k, x, up);
    return out;
  }
  const Guard g = guard(p, k);
  if (g.a >= g.b && g.a_ge_c()) {
    out.add(p.shifted({up}), 1);
  } else if (g.a < g.b && g.a_lt_c()) {
    add_double_sum(out, p, k, x, up);
  } else if (g.a < g.b) {  // lam_{k-2,1} <= lam_{k-1,1} < lam_{k1}
    add_sum_j(out, p, k, x, up);
  } else {  // lam_{k1} <= lam_{k-1,1} < lam_{k-2,1}
    add_sum_m(out, p, k, x, up);
  }
  return out;
}

LinComb zeta_minus(const Pattern& p, int k, int i) {
  check_args(p, k, i);
  LinComb out;
  const D down{false, k - 1, i, -1};
  if (i >= 2) {
    out.add(p.shifted({down}), 1);
    return out;
  }
  const Rational x = q(p.l(k - 1, 1)) - 1;
  const Guard g = guard(p, k);
  if (g.a <= g.b && g.a_le_c()) {
    out.add(p.shifted({down}), 1);
  } else if (g.a > g.b && g.a_gt_c()) {
    add_double_sum(out, p, k, x, down);
  } else if (g.a > g.b) {  // lam_{k1} < lam_{k-1,1} <= lam_{k-2,1}
    add_sum_j(out, p, k, x, down);
  } else {  // lam_{k-2,1} < lam_{k-1,1} <= lam_{k1}
    add_sum_m(out, p, k, x, down);
  }
  return out;
}

}  // namespace o2n
