#pragma once

#include <utility>
#include <vector>

#include "o2n/pattern.hpp"
#include "o2n/rational.hpp"

namespace o2n {

// Formal combination of basis vectors; invalid arrays are dropped, equal
// patterns merged, zero coefficients removed.
class LinComb {
 public:
  void add(const Pattern& p, const Rational& c);
  const std::vector<std::pair<Pattern, Rational>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<std::pair<Pattern, Rational>> terms_;
};

// prod_{a != i} 1 / (l_{k-1,i}^2 - l_{k-1,a}^2)
Rational coeff_A(const Pattern& p, int k, int i);
// prod_{a != j} (x + l'_{k-1,a})(x - l'_{k-1,a} + 1) / (l'_{k-1,a} - l'_{k-1,j})
Rational coeff_B(const Pattern& p, int k, int j, const Rational& x);
Rational coeff_C(const Pattern& p, int k, int i);

LinComb zeta_plus(const Pattern& p, int k, int i);
LinComb zeta_minus(const Pattern& p, int k, int i);

}  // namespace o2n
