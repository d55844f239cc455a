#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace o2n {

// F(i,j) with i, j in {-n..-1, 1..n}.
struct Gen {
  int i = 0, j = 0;
  std::string label() const;  // "F(i,j)"
  auto operator<=>(const Gen&) const = default;
};

Gen parse_gen(std::string_view label, int n);  // ParseError

// Position of index i in the order -n..-1, 1..n.
int index_rank(int n, int i);
// Raising: i before j in that order.
inline bool is_raising(int n, Gen g) { return index_rank(n, g.i) < index_rank(n, g.j); }

// One representative per pair {F(i,j), F(-j,-i)} (F(-i,i) = 0 excluded):
// the first met scanning i over 1..n, -n..-1 and j over -n..-1, 1..n.
// n(2n-1) entries.
const std::vector<Gen>& canonical_generators(int n);

struct CanonicalRef {
  std::size_t index;
  int sign;  // F(i,j) = sign * canonical[index]
};
// nullopt for the identically zero F(-i,i)
std::optional<CanonicalRef> canonical_ref(int n, Gen g);

// Root of F(i,j): e_i - e_j with e_{-i} = -e_i, length n.
std::vector<int> root(int n, Gen g);

}  // namespace o2n
