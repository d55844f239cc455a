#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "o2n/highest_weight.hpp"
#include "o2n/rational.hpp"
#include "o2n/representation.hpp"

namespace o2n {

struct Counterexample {
  std::string where;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  HighestWeight hw;
  bool pass = true;
  std::vector<Counterexample> counterexamples;

  void fail(std::string where, std::string expected, std::string got);
};

// Each check is exact and read-only; `jobs` only affects scheduling.
VerifyReport check_brackets(const Representation& rep, int jobs = 1);
VerifyReport check_weights(const Representation& rep);
VerifyReport check_highest(const Representation& rep);
VerifyReport check_dimension(const Representation& rep);
VerifyReport check_branching(const Representation& rep);
VerifyReport check_casimir(const Representation& rep);
VerifyReport check_irreducible(const Representation& rep);

const std::vector<std::string>& suite_names();  // without "all"
std::vector<VerifyReport> run_suite(const Representation& rep, std::string_view suite, int jobs = 1);

// Omega = sum_{i,j} F(i,j) F(j,i): the scalar if Omega is scalar.
std::optional<Rational> casimir_scalar(const Representation& rep);
// Omega on V(lambda) from the highest weight alone: on the highest vector
// only F(i,j)F(j,i) with F(j,i) lowering survive, each giving F_ii - F_jj.
Rational casimir_closed_form(const HighestWeight& hw);
// Omega on the 2n-dimensional defining representation (scalar, checked).
Rational casimir_defining(int n);

// Smallest invariant subspace containing the highest vector.
std::size_t cyclic_span_rank(const Representation& rep);

struct MutationOutcome {
  std::string suite;
  std::string mutation;
  bool detected = false;
  bool applicable = true;  // false: no single-entry corruption affects this suite here
};
// Corrupts one entry (or, for dim/branching, one basis vector) per suite
// and reports whether the suite notices.
std::vector<MutationOutcome> mutation_self_test(const Representation& rep);

}  // namespace o2n
