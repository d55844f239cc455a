#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "corpus.hpp"
#include "o2n/error.hpp"
#include "o2n/pattern.hpp"

using namespace o2n;

namespace {

HighestWeight hw(int n, const char* l) { return parse_highest_weight(n, l); }

// Every array of the right shape with entries in [-B, B] of the right
// parity, filtered by validate. B = max |lambda_i| bounds all entries.
std::vector<Pattern> brute_force(const HighestWeight& w) {
  const int n = w.n;
  std::int64_t B = 0;
  for (auto t : w.twice) B = std::max(B, t < 0 ? -t : t);
  const std::int64_t parity = w.twice[0] & 1;
  std::vector<std::int64_t> flat(w.twice);
  const std::size_t total = static_cast<std::size_t>(n) * n;
  std::vector<Pattern> out;
  std::function<void()> rec = [&] {
    if (flat.size() == total) {
      Pattern p(n, flat);
      if (validate(p)) out.push_back(p);
      return;
    }
    for (std::int64_t v = -B; v <= B; ++v) {
      if ((v & 1) != parity) continue;
      flat.push_back(v);
      rec();
      flat.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

Pattern n2(const HighestWeight& w, std::int64_t prime11_twice, std::int64_t lam11_twice) {
  return Pattern::from_rows({w.twice, {prime11_twice}, {lam11_twice}});
}

}  // namespace

TEST_CASE("highest weight validation names the violated condition") {
  CHECK_NOTHROW(hw(2, "0,-1"));
  CHECK_NOTHROW(hw(3, "-1/2,-1/2,-1/2"));
  try {
    hw(2, "1,0");
    FAIL("accepted (1,0)");
  } catch (const InvalidWeight& e) {
    CHECK(std::string(e.what()).find("-|lambda_1| >= lambda_2") != std::string::npos);
  }
  CHECK_THROWS_AS(hw(2, "0,-1/2"), InvalidWeight);  // mixed parity
  CHECK_THROWS_AS(hw(3, "0,-2,-1"), InvalidWeight);
  CHECK_THROWS_AS(hw(2, "0"), InvalidWeight);
  CHECK_THROWS_AS(hw(2, "0,x"), ParseError);
  CHECK_FALSE(is_valid_highest_weight({2, {2, 0}}));
}

TEST_CASE("validate: shape, parity and interlacing") {
  const auto w = hw(2, "0,-1");
  CHECK(validate(Pattern::from_rows({{0, 0}, {0}, {0}})));
  CHECK_FALSE(validate(n2(w, 0, 2)));  // -|lam_11| = -1 < lam'_11 = 0
  CHECK(validate(n2(w, -2, 2)));
  CHECK_FALSE(validate(n2(w, -1, 0)));  // parity
  CHECK_THROWS_AS(Pattern::from_rows({{0, 0}, {0, 0}, {0}}), ShapeError);
  CHECK_THROWS_AS(Pattern::from_rows({{0, 0}, {0}}), ShapeError);
}

TEST_CASE("enumeration examples and index order") {
  CHECK(enumerate(hw(2, "0,0")).size() == 1);
  const auto w = hw(2, "0,-1");
  const auto pats = enumerate(w);
  REQUIRE(pats.size() == 4);
  CHECK(pats[0] == n2(w, -2, -2));
  CHECK(pats[1] == n2(w, -2, 0));
  CHECK(pats[2] == n2(w, -2, 2));
  CHECK(pats[3] == n2(w, 0, 0));
  CHECK(PatternBasis(w).index_of(n2(w, -2, 2)) == 2);
  CHECK(enumerate(hw(3, "0,-1,-1")).size() == 15);
  CHECK_THROWS_AS(PatternBasis(w).index_of(n2(w, 0, 2)), NotFound);
}

TEST_CASE("enumeration agrees with brute force over the corpus") {
  for (const auto& w : test::corpus()) {
    CAPTURE(w.str());
    const auto pats = enumerate(w);
    CHECK(pats == brute_force(w));
    CHECK(weyl_dim(w) == static_cast<unsigned long>(pats.size()));
    const PatternBasis basis(w);
    for (std::size_t i = 0; i < pats.size(); ++i) CHECK(basis.index_of(pats[i]) == i);
  }
}

TEST_CASE("weyl dimension examples") {
  CHECK(weyl_dim(hw(2, "0,0")) == 1);
  CHECK(weyl_dim(hw(2, "0,-1")) == 4);
  CHECK(weyl_dim(hw(2, "-1/2,-1/2")) == 2);
  CHECK(weyl_dim(hw(3, "0,-1,-1")) == 15);
  CHECK(weyl_dim(hw(3, "-1/2,-1/2,-1/2")) == 4);
  CHECK(weyl_dim(hw(4, "0,0,0,-1")) == 8);
  CHECK(weyl_dim(hw(1, "3")) == 1);
}

TEST_CASE("weights") {
  const auto w = hw(2, "0,-1");
  const auto p = n2(w, -2, 2);
  CHECK(weight(p) == std::vector<HalfInt>{HalfInt::from_int(1), HalfInt::from_int(0)});
  std::vector<std::int64_t> f22;
  for (const auto& q : enumerate(w)) f22.push_back(weight_k(q, 2).twice / 2);
  CHECK(f22 == std::vector<std::int64_t>{0, -1, 0, 1});
  for (const auto& x : test::corpus()) {
    CAPTURE(x.str());
    const auto xi = xi_pattern(x);
    CHECK(validate(xi));
    for (int k = 1; k <= x.n; ++k) CHECK(weight_k(xi, k) == x.at(k));
  }
}

TEST_CASE("weight multiset: traceless and closed under paired sign changes") {
  for (const auto& x : test::corpus()) {
    CAPTURE(x.str());
    std::map<std::vector<std::int64_t>, int> ms;
    std::vector<std::int64_t> trace(x.n, 0);
    for (const auto& p : enumerate(x)) {
      std::vector<std::int64_t> w;
      for (auto h : weight(p)) w.push_back(h.twice);
      for (int k = 0; k < x.n; ++k) trace[k] += w[k];
      ++ms[w];
    }
    CHECK(trace == std::vector<std::int64_t>(x.n, 0));
    for (int a = 0; a < x.n; ++a)
      for (int b = a + 1; b < x.n; ++b) {
        std::map<std::vector<std::int64_t>, int> flipped;
        for (const auto& [w, c] : ms) {
          auto f = w;
          f[a] = -f[a], f[b] = -f[b];
          flipped[f] += c;
        }
        CHECK(flipped == ms);
      }
  }
}

TEST_CASE("A-denominators never vanish on enumerated patterns") {
  for (const auto& x : test::corpus())
    for (const auto& p : enumerate(x))
      for (int k = 2; k <= x.n; ++k)
        for (int a = 2; a <= k - 1; ++a) {
          CHECK(p.l(k - 1, a) <= -abs(p.l(k - 1, 1)) - HalfInt::from_int(1));
          for (int b = 1; b < a; ++b) CHECK(abs(p.l(k - 1, a)) != abs(p.l(k - 1, b)));
        }
}

TEST_CASE("branching") {
  CHECK(branching(hw(2, "0,0")) == BranchingTable{{{0}, 1}});
  CHECK(branching(hw(2, "0,-1")) == BranchingTable{{{0}, 2}, {{2}, 1}, {{-2}, 1}});
  for (const auto& x : test::corpus()) {
    Integer total = 0;
    for (const auto& [mu, c] : branching(x)) {
      CHECK(c > 0);
      CHECK(is_valid_highest_weight({x.n - 1, mu}));
      total += weyl_dim({x.n - 1, mu}) * static_cast<unsigned long>(c);
    }
    CHECK(total == weyl_dim(x));
  }
}
