#include <doctest.h>

#include <functional>
#include <random>

#include "corpus.hpp"
#include "o2n/error.hpp"
#include "o2n/kernels.hpp"
#include "o2n/linalg.hpp"
#include "o2n/operators.hpp"
#include "o2n/representation.hpp"
#include "o2n/structure_constants.hpp"

using namespace o2n;

namespace {

HighestWeight hw(int n, const char* l) { return parse_highest_weight(n, l); }

SparseOperator random_sparse(std::mt19937_64& rng, std::size_t dim, double density) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  SparseOperator op(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    SparseOperator::Column col;
    for (std::size_t t = 0; t < dim; ++t)
      if (coin(rng) < density) col.push_back({static_cast<std::uint32_t>(t), make_rational(num(rng), den(rng))});
    op.set_column(s, std::move(col));
  }
  return op;
}

void check_same(const Representation& a, const Representation& b) {
  REQUIRE(a.cache().size() == b.cache().size());
  for (std::size_t i = 0; i < a.cache().size(); ++i) {
    REQUIRE(a.cache()[i]);
    REQUIRE(b.cache()[i]);
    CHECK(*a.cache()[i] == *b.cache()[i]);
  }
}

}  // namespace

TEST_CASE("sparse operator normal form") {
  SparseOperator op(3);
  op.set_column(1, {{2, Rational(1)}, {0, Rational(2)}, {2, Rational(-1)}, {1, Rational(0)}});
  CHECK(op.column(1) == SparseOperator::Column{{0, Rational(2)}});
  CHECK(op.nnz() == 1);
  SparseOperator m = op - op;
  CHECK(m.is_zero_operator());
  CHECK((op * Rational(0)).is_zero_operator());
  CHECK_THROWS_AS(op += SparseOperator(2), std::invalid_argument);
}

TEST_CASE("serial and OpenMP kernels agree exactly") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 5; ++it) {
    const auto a = random_sparse(rng, 40, 0.1), b = random_sparse(rng, 40, 0.1);
    const auto serial = kernels::multiply_serial(a, b);
    CHECK(kernels::multiply_parallel(a, b, 4) == serial);
    CHECK(kernels::multiply(a, b, 3) == serial);
    CHECK(kernels::commutator(a, b, 4) == kernels::commutator(a, b, 1));
  }
}

TEST_CASE("parallel map rethrows the lowest failing index") {
  auto fn = [](std::size_t i) -> int {
    if (i == 7 || i == 30) throw std::runtime_error("at " + std::to_string(i));
    return static_cast<int>(i);
  };
  for (int jobs : {1, 4}) {
    try {
      kernels::map_columns<int>(50, jobs, fn);
      FAIL("no exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "at 7");
    }
  }
  const auto v = kernels::map_columns<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
}

TEST_CASE("operator builders do not depend on the thread count") {
  for (const auto& x : test::corpus()) {
    const PatternBasis b(x);
    for (int k = 2; k <= x.n; ++k) {
      CHECK(matrix_F_lower(b, k, 1) == matrix_F_lower(b, k, 4));
      CHECK(matrix_Phi_down(b, k, 1) == matrix_Phi_down(b, k, 4));
      CHECK(matrix_Phi_param(b, k, 1) == matrix_Phi_param(b, k, 4));
      CHECK(regularized_commutator(b, k, 1) == regularized_commutator(b, k, 4));
    }
  }
}

TEST_CASE("generator cache: signs, zeros, missing") {
  Representation rep(hw(2, "0,-1"));
  CHECK(rep.missing().size() == 6);
  CHECK_THROWS_AS(rep.gen({1, 2}), NotFound);
  CHECK(rep.gen({-1, 1}).is_zero_operator());
  CHECK_THROWS_AS(rep.set({-2, 2}, SparseOperator(4)), std::invalid_argument);
  CHECK_THROWS_AS(rep.set({1, 1}, SparseOperator(3)), std::invalid_argument);
  SparseOperator op(4);
  op.set_column(0, {{1, Rational(3)}});
  rep.set({-2, -1}, op);
  CHECK(rep.has({1, 2}));
  CHECK(rep.gen({1, 2}) == -op);
}

TEST_CASE("build: generator counts and antisymmetry") {
  CHECK(build_representation(hw(2, "0,-1")).missing().empty());
  CHECK(build_representation(hw(2, "0,-1")).cache().size() == 6);
  CHECK(build_representation(hw(3, "0,0,-1")).cache().size() == 15);
  const auto zero = build_representation(hw(2, "0,0"));
  for (const auto& op : zero.cache()) CHECK(op->is_zero_operator());
  for (const auto& x : test::corpus()) {
    const auto rep = build_representation(x);
    for (int i = -x.n; i <= x.n; ++i)
      for (int j = -x.n; j <= x.n; ++j) {
        if (i == 0 || j == 0) continue;
        CHECK(rep.gen({-j, -i}) == -rep.gen({i, j}));
        if (i == -j) CHECK(rep.gen({i, j}).is_zero_operator());
      }
  }
}

TEST_CASE("closure order and thread count do not change the result") {
  for (const auto& x : test::corpus()) {
    CAPTURE(x.str());
    const auto fwd = build_representation(x, {1, ClosureOrder::Forward});
    check_same(fwd, build_representation(x, {1, ClosureOrder::Reverse}));
    check_same(fwd, build_representation(x, {4, ClosureOrder::Forward}));
  }
}

TEST_CASE("closure from the five families alone, in either order") {
  for (const auto& x : test::corpus()) {
    const auto full = build_representation(x);
    for (auto order : {ClosureOrder::Forward, ClosureOrder::Reverse}) {
      Representation rep(x);
      for (int k = 1; k <= x.n; ++k) rep.set({k, k}, full.gen({k, k}));
      if (x.n >= 2) {
        rep.set({2, 1}, full.gen({2, 1}));
        rep.set({-2, 1}, full.gen({-2, 1}));
      }
      for (int k = 2; k <= x.n; ++k) {
        rep.set({k - 1, -k}, full.gen({k - 1, -k}));
        rep.set({k - 1, k}, full.gen({k - 1, k}));
      }
      close_generators(rep, StructureConstants(x.n), order);
      check_same(rep, full);
    }
  }
}

TEST_CASE("closure reports what it could not reach") {
  Representation rep(hw(2, "0,-1"));
  rep.set({1, 1}, matrix_F_diag(rep.basis(), 1));
  try {
    close_generators(rep, StructureConstants(2));
    FAIL("closure succeeded without generators");
  } catch (const ClosureIncomplete& e) {
    CHECK(e.missing().size() == 5);
  }
}

TEST_CASE("linear solver") {
  LinearSystem sys;
  sys.unknowns = 2;
  sys.add({{0, Rational(1)}, {1, Rational(1)}}, 3);
  sys.add({{0, Rational(1)}, {1, Rational(-1)}}, 1);
  auto sol = solve(sys);
  CHECK(sol.consistent);
  CHECK(sol.free_unknowns == 0);
  CHECK(sol.x == std::vector<Rational>{2, 1});
  sys.add({{0, Rational(2)}, {1, Rational(2)}}, 7);
  CHECK_FALSE(solve(sys).consistent);
  LinearSystem under;
  under.unknowns = 3;
  under.add({{0, Rational(1)}, {2, Rational(1)}}, 1);
  CHECK(solve(under).free_unknowns == 2);
}
