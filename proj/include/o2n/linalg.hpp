#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "o2n/sparse.hpp"

namespace o2n {

// Row echelon form over Q, grown one sparse vector at a time.
class EchelonBasis {
 public:
  // Reduces v against the basis; keeps it if something survives.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint32_t, SparseVector>& rows() const { return rows_; }

 private:
  void reduce(SparseVector& v) const;
  std::map<std::uint32_t, SparseVector> rows_;  // pivot -> row, pivot entry 1
};

// Exact solve of sum_j a_ij x_j = b_i.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<SparseVector> rows;
  std::vector<Rational> rhs;
  void add(SparseVector row, Rational b) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }
};

struct Solution {
  bool consistent = false;
  std::size_t free_unknowns = 0;
  std::vector<Rational> x;  // particular solution (free unknowns set to 0)
};

Solution solve(const LinearSystem& sys);

}  // namespace o2n
