#pragma once

#include <cstddef>
#include <vector>

#include "o2n/pattern.hpp"
#include "o2n/sparse.hpp"

namespace o2n {

// All builders take `jobs`: <= 1 runs the serial reference loop, otherwise
// columns are computed by an OpenMP team. Results do not depend on jobs.

// F(k,k), diagonal.
SparseOperator matrix_F_diag(const PatternBasis& basis, int k);
// F(k-1,-k) = sum_i A_ki (zeta+ - zeta-)
SparseOperator matrix_F_lower(const PatternBasis& basis, int k, int jobs = 1);
// Phi_{-k,k}; F_kk read on the target pattern.
SparseOperator matrix_Phi_down(const PatternBasis& basis, int k, int jobs = 1);
// Phi_{k-1,-k}(u); F_kk read on the target pattern.
ParamOperator matrix_Phi_param(const PatternBasis& basis, int k, int jobs = 1);

// [Phi(u+2) D - D Phi(u)]_{u=0}, entry by entry in canonical form.
// RegularizationError if an entry has a pole at u = 0.
SparseOperator regularized_commutator(const PatternBasis& basis, int k, int jobs = 1);

// Source columns on which some +-l_{k-1,i} + F_kk vanishes. There the
// commutator above loses the i-th contribution (0/0), so F(k-1,k) has to
// be recovered another way (see matrix_F_raise in representation.hpp).
std::vector<std::size_t> degenerate_columns(const PatternBasis& basis, int k);

// F(2,1) and F(-2,1) from the o(4) = sl2 + sl2 monomial basis of each tower.
SparseOperator g2_F21(const PatternBasis& basis);
SparseOperator g2_Fm21(const PatternBasis& basis);

}  // namespace o2n
