#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "o2n/half_int.hpp"
#include "o2n/rational.hpp"

namespace o2n {

// Highest weight of o(2n) in the convention -|l1| >= l2 >= ... >= ln.
struct HighestWeight {
  int n = 0;
  std::vector<std::int64_t> twice;  // doubled entries

  HalfInt at(int i) const { return HalfInt{twice.at(i - 1)}; }  // 1-based
  std::string str() const;  // "(0,-1/2,...)"
  auto operator<=>(const HighestWeight&) const = default;
};

// Throws InvalidWeight naming the first violated condition.
void validate_highest_weight(const HighestWeight& hw);
bool is_valid_highest_weight(const HighestWeight& hw);

// "0,-1" / "-1/2,-1/2,-1/2"; validates length, parity and inequalities.
HighestWeight parse_highest_weight(int n, std::string_view list);

// Weyl dimension via the standard D_n dominant weight
// (-l_n, ..., -l_2, l_1); n == 1 is o(2), always 1.
Integer weyl_dim(const HighestWeight& hw);

// Restriction to o(2n-2): doubled mu -> multiplicity.
using BranchingTable = std::map<std::vector<std::int64_t>, std::uint64_t>;
BranchingTable branching(const HighestWeight& hw);

}  // namespace o2n
