#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "o2n/generators.hpp"
#include "o2n/highest_weight.hpp"
#include "o2n/pattern.hpp"
#include "o2n/sparse.hpp"
#include "o2n/structure_constants.hpp"

namespace o2n {

// Highest weight, pattern basis and the generator cache (one slot per
// canonical generator; F(-j,-i) and F(-i,i) are served by sign/zero).
class Representation {
 public:
  explicit Representation(const HighestWeight& hw);
  Representation(const HighestWeight& hw, PatternBasis basis);

  const HighestWeight& highest_weight() const { return basis_.highest_weight(); }
  const PatternBasis& basis() const { return basis_; }
  int n() const { return basis_.n(); }
  std::size_t dim() const { return basis_.size(); }

  bool has(Gen g) const;
  SparseOperator gen(Gen g) const;  // NotFound if not cached yet
  void set(Gen g, SparseOperator op);
  std::vector<Gen> missing() const;
  const std::vector<std::optional<SparseOperator>>& cache() const { return cache_; }
  std::optional<SparseOperator>& slot(std::size_t canonical_index) { return cache_.at(canonical_index); }

 private:
  PatternBasis basis_;
  std::vector<std::optional<SparseOperator>> cache_;
};

enum class ClosureOrder { Forward, Reverse };

// Derives unknown generators from brackets of known ones until nothing
// changes, using only generators with |indices| <= limit (0 = no limit).
// Returns the number of generators added.
std::size_t close_partial(Representation& rep, const StructureConstants& sc, int limit,
                          ClosureOrder order = ClosureOrder::Forward, int jobs = 1);
// Full closure; ClosureIncomplete if anything stays unknown.
void close_generators(Representation& rep, const StructureConstants& sc, ClosureOrder order = ClosureOrder::Forward,
                      int jobs = 1);

// F(k-1,k). Needs F(j+1,j), j < k, and F(2,-1) already cached. Columns
// where the regularized commutator is degenerate are re-derived from
// [F(k-1,k), f] = (structure constants) for the simple lowering f of o(2k).
struct RaiseResult {
  SparseOperator op;
  std::vector<std::size_t> degenerate;  // source columns that were solved for
  std::size_t changed_entries = 0;      // entries differing from the commutator
};
RaiseResult matrix_F_raise(const Representation& rep, const StructureConstants& sc, int k, int jobs = 1);

struct BuildOptions {
  int jobs = 1;
  ClosureOrder order = ClosureOrder::Forward;
};
Representation build_representation(const HighestWeight& hw, const BuildOptions& opt = {});

}  // namespace o2n
