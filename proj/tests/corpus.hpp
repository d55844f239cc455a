#pragma once

#include <utility>
#include <vector>

#include "o2n/highest_weight.hpp"

namespace o2n::test {

inline std::vector<HighestWeight> corpus() {
  static const std::vector<std::pair<int, const char*>> list = {
      {2, "0,0"},   {2, "0,-1"},   {2, "-1/2,-1/2"}, {2, "1/2,-1/2"},       {2, "-1,-1"},    {2, "0,-2"},
      {2, "1,-1"},  {3, "0,0,-1"}, {3, "0,-1,-1"},   {3, "-1/2,-1/2,-1/2"}, {3, "-1,-1,-2"}, {4, "0,0,0,-1"},
  };
  std::vector<HighestWeight> out;
  for (auto [n, l] : list) out.push_back(parse_highest_weight(n, l));
  return out;
}

}  // namespace o2n::test
