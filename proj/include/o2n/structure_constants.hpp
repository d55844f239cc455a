#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "o2n/generators.hpp"
#include "o2n/rational.hpp"

namespace o2n {

using DenseMatrix = std::vector<std::vector<Rational>>;

// F(i,j) = E(i,j) - E(-j,-i) on the 2n-dim defining space,
// rows/columns ordered -n..-1, 1..n.
DenseMatrix defining_matrix(int n, Gen g);

// Coordinates of M in the canonical generators; ExpansionError if M is
// not in their span.
using GenExpansion = std::vector<std::pair<std::size_t, Rational>>;
GenExpansion expand_in_generators(int n, const DenseMatrix& m);

// [canonical a, canonical b] for all a, b, computed from defining matrices.
class StructureConstants {
 public:
  explicit StructureConstants(int n);
  int n() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Gen>& generators() const { return gens_; }
  const GenExpansion& bracket(std::size_t a, std::size_t b) const { return table_[a * gens_.size() + b]; }
  // [g, h] for arbitrary labels, signs folded in
  GenExpansion bracket(Gen g, Gen h) const;

 private:
  int n_;
  std::vector<Gen> gens_;
  std::vector<GenExpansion> table_;
};

}  // namespace o2n
