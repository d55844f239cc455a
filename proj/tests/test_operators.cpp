#include <doctest.h>

#include <algorithm>
#include <functional>

#include "corpus.hpp"
#include "o2n/coefficients.hpp"
#include "o2n/error.hpp"
#include "o2n/kernels.hpp"
#include "o2n/operators.hpp"
#include "o2n/pattern.hpp"
#include "o2n/representation.hpp"
#include "o2n/structure_constants.hpp"

using namespace o2n;

namespace {

HighestWeight hw(int n, const char* l) { return parse_highest_weight(n, l); }

Pattern first_with(const HighestWeight& w, const std::function<bool(const Pattern&)>& pred) {
  const auto pats = enumerate(w);
  auto it = std::find_if(pats.begin(), pats.end(), pred);
  REQUIRE(it != pats.end());
  return *it;
}

Pattern n2(const HighestWeight& w, std::int64_t prime11_twice, std::int64_t lam11_twice) {
  return Pattern::from_rows({w.twice, {prime11_twice}, {lam11_twice}});
}

}  // namespace

TEST_CASE("coefficient A") {
  const auto p2 = xi_pattern(hw(2, "0,-1"));
  CHECK(coeff_A(p2, 2, 1) == 1);
  const auto p = first_with(hw(3, "0,-2,-2"), [](const Pattern& q) { return q.lam2(2, 1) == 0 && q.lam2(2, 2) == -4; });
  CHECK(coeff_A(p, 3, 1) == make_rational(-1, 9));
  CHECK(coeff_A(p, 3, 2) == make_rational(1, 9));
}

TEST_CASE("coefficient B") {
  CHECK(coeff_B(xi_pattern(hw(2, "0,-1")), 2, 1, 5) == 1);
  const auto p =
      first_with(hw(3, "0,-1,-1"), [](const Pattern& q) { return q.prime2(2, 1) == 0 && q.prime2(2, 2) == -2; });
  CHECK(coeff_B(p, 3, 1, 1) == 2);
  CHECK(coeff_B(p, 3, 2, 1) == 1);
}

TEST_CASE("coefficient C") {
  CHECK(coeff_C(xi_pattern(hw(2, "0,-1")), 2, 1) == 0);
  // (max + l' - 1)(min - l' + 1)(l_22 - l' + 1) = (-2)(2)(-1)
  const auto w = hw(2, "0,-2");
  CHECK(coeff_C(n2(w, -2, 0), 2, 1) == 4);
}

TEST_CASE("zeta at k = 2 on the vector representation") {
  const auto w = hw(2, "0,-1");
  const auto xi = xi_pattern(w);
  CHECK(xi == n2(w, -2, 0));
  const LinComb zp = zeta_plus(xi, 2, 1);
  REQUIRE(zp.terms().size() == 1);
  CHECK(zp.terms()[0].first == n2(w, -2, 2));
  CHECK(zp.terms()[0].second == 1);
  CHECK(zeta_minus(xi, 2, 1).empty());
}

TEST_CASE("LinComb merges, drops zeros and invalid arrays") {
  const auto w = hw(2, "0,-1");
  LinComb c;
  c.add(n2(w, -2, 0), 1);
  c.add(n2(w, -2, 0), -1);
  c.add(n2(w, 0, 2), 5);  // invalid
  c.add(n2(w, -2, 2), 0);
  CHECK(c.empty());
}

TEST_CASE("diagonal generators") {
  const PatternBasis triv(hw(2, "0,0"));
  CHECK(matrix_F_diag(triv, 1).is_zero_operator());
  const PatternBasis vec(hw(2, "0,-1"));
  const auto f22 = matrix_F_diag(vec, 2);
  std::vector<Rational> d;
  for (std::size_t s = 0; s < vec.size(); ++s) d.push_back(f22.at(s, s));
  CHECK(d == std::vector<Rational>{0, -1, 0, 1});
  for (const auto& x : test::corpus()) {
    const PatternBasis b(x);
    for (int k = 1; k <= x.n; ++k) {
      const auto f = matrix_F_diag(b, k);
      Rational tr = 0;
      for (std::size_t s = 0; s < b.size(); ++s) tr += f.at(s, s);
      CHECK(tr == 0);
    }
  }
  CHECK_THROWS_AS(matrix_F_diag(vec, 3), std::out_of_range);
}

TEST_CASE("trivial representation: everything vanishes") {
  const PatternBasis b(hw(3, "0,0,0"));
  for (int k = 2; k <= 3; ++k) {
    CHECK(matrix_F_lower(b, k).is_zero_operator());
    CHECK(matrix_Phi_down(b, k).is_zero_operator());
    CHECK(matrix_Phi_param(b, k).is_zero_operator());
    CHECK(regularized_commutator(b, k).is_zero_operator());
  }
  CHECK(g2_F21(b).is_zero_operator());
  CHECK(g2_Fm21(b).is_zero_operator());
}

TEST_CASE("weight shifts of the level-k operators") {
  for (const auto& x : test::corpus()) {
    CAPTURE(x.str());
    const PatternBasis b(x);
    auto shift_ok = [&](const SparseOperator& op, int k, int d_km1, int d_k) {
      for (std::size_t s = 0; s < b.size(); ++s)
        for (const auto& e : op.column(s))
          for (int c = 1; c <= x.n; ++c) {
            const int want = c == k - 1 ? d_km1 : c == k ? d_k : 0;
            if ((b.weight_of(e.target)[c - 1] - b.weight_of(s)[c - 1]).twice != 2 * want) return false;
          }
      return true;
    };
    for (int k = 2; k <= x.n; ++k) {
      CHECK(shift_ok(matrix_F_lower(b, k), k, 1, 1));
      CHECK(shift_ok(matrix_Phi_down(b, k), k, 0, -2));
      CHECK(shift_ok(regularized_commutator(b, k), k, 1, -1));
    }
    CHECK(shift_ok(g2_F21(b), 2, -1, 1));
    CHECK(shift_ok(g2_Fm21(b), 2, -1, -1));
  }
}

TEST_CASE("Phi(u) at k = 2 on the vector representation has simple poles") {
  const PatternBasis b(hw(2, "0,-1"));
  const auto phi = matrix_Phi_param(b, 2);
  CHECK(phi.nnz() > 0);
  for (const auto& col : phi.columns())
    for (const auto& e : col) CHECK(e.value.den().degree() == 1);
}

TEST_CASE("u * Phi(u) tends to F(k-1,-k)") {
  for (const auto& x : test::corpus()) {
    const PatternBasis b(x);
    for (int k = 2; k <= x.n; ++k) {
      const auto phi = matrix_Phi_param(b, k);
      const auto low = matrix_F_lower(b, k);
      for (std::size_t s = 0; s < b.size(); ++s) {
        SparseOperator::Column lead;
        for (const auto& e : phi.column(s)) lead.push_back({e.target, rf_limit_coeff(e.value, 1)});
        SparseOperator::normalize(lead);
        CHECK(lead == low.column(s));
        for (const auto& e : phi.column(s)) CHECK(rf_limit_coeff(e.value, 0) == 0);
      }
    }
  }
}

TEST_CASE("u-commutator is pole-free at 0 on the corpus") {
  for (const auto& x : test::corpus())
    for (int k = 2; k <= x.n; ++k) CHECK_NOTHROW(regularized_commutator(PatternBasis(x), k));
}

TEST_CASE("n = 2 tower operators on the vector representation") {
  const auto w = hw(2, "0,-1");
  const PatternBasis b(w);
  const auto f21 = g2_F21(b);
  const std::size_t s = b.index_of(n2(w, -2, 0)), t = b.index_of(n2(w, -2, -2));
  CHECK(f21.column(s) == SparseOperator::Column{{static_cast<std::uint32_t>(t), Rational(1)}});
  CHECK(f21.column(t).empty());
}

TEST_CASE("the two n = 2 tower operators commute") {
  // e2 - e1 plus -e2 - e1 is not a root
  for (const auto& x : test::corpus()) {
    if (x.n != 2) continue;
    const PatternBasis b(x);
    const auto a = g2_F21(b), c = g2_Fm21(b);
    CHECK(kernels::commutator(a, c).is_zero_operator());
  }
}

TEST_CASE("raising generator at level 2 against the bracket oracle") {
  const auto w = hw(2, "0,-1");
  Representation rep = build_representation(w);
  const StructureConstants sc(2);
  const auto raise = matrix_F_raise(rep, sc, 2);
  const auto lhs = kernels::commutator(raise.op, rep.gen({2, 1}));
  SparseOperator rhs(rep.dim());
  for (const auto& [h, coef] : sc.bracket(Gen{1, 2}, Gen{2, 1})) rhs.axpy(coef, *rep.cache()[h]);
  CHECK(lhs == rhs);
  CHECK(rhs == rep.gen({1, 1}) - rep.gen({2, 2}));
}

TEST_CASE("degenerate columns and their completion") {
  // On the o(4) spinors the commutator formula loses a term on some column;
  // the completed operator differs from it there and nowhere else.
  for (const char* l : {"-1/2,-1/2", "1/2,-1/2"}) {
    CAPTURE(l);
    const Representation rep = build_representation(hw(2, l));
    const StructureConstants sc(2);
    const auto literal = regularized_commutator(rep.basis(), 2);
    const auto res = matrix_F_raise(rep, sc, 2);
    CHECK(res.op == rep.gen({1, 2}));
    for (std::size_t s = 0; s < rep.dim(); ++s)
      if (std::find(res.degenerate.begin(), res.degenerate.end(), s) == res.degenerate.end())
        CHECK(literal.column(s) == res.op.column(s));
  }
  bool any_changed = false;
  for (const auto& x : test::corpus()) {
    const Representation rep = build_representation(x);
    const StructureConstants sc(x.n);
    for (int k = 2; k <= x.n; ++k) {
      const auto res = matrix_F_raise(rep, sc, k);
      CHECK(res.op == rep.gen({k - 1, k}));
      any_changed = any_changed || res.changed_entries > 0;
    }
  }
  CHECK(any_changed);
}
