#include "o2n/highest_weight.hpp"

#include <functional>

#include "o2n/error.hpp"

namespace o2n {

std::string HighestWeight::str() const {
  std::string s = "(";
  for (int i = 1; i <= n; ++i) s += (i > 1 ? "," : "") + at(i).str();
  return s + ")";
}

void validate_highest_weight(const HighestWeight& hw) {
  if (hw.n < 1) throw InvalidWeight("rank n must be positive");
  if (static_cast<int>(hw.twice.size()) != hw.n)
    throw InvalidWeight("expected " + std::to_string(hw.n) + " entries, got " + std::to_string(hw.twice.size()));
  const bool odd = hw.twice[0] % 2 != 0;
  for (int i = 1; i <= hw.n; ++i)
    if ((hw.twice[i - 1] % 2 != 0) != odd)
      throw InvalidWeight("mixed parity: entries must be all integers or all half-integers " + hw.str());
  if (hw.n >= 2 && !(-abs(hw.at(1)) >= hw.at(2)))
    throw InvalidWeight("violates -|lambda_1| >= lambda_2 in " + hw.str());
  for (int i = 2; i < hw.n; ++i)
    if (!(hw.at(i) >= hw.at(i + 1)))
      throw InvalidWeight("violates lambda_" + std::to_string(i) + " >= lambda_" + std::to_string(i + 1) + " in " +
                          hw.str());
}

bool is_valid_highest_weight(const HighestWeight& hw) {
  try {
    validate_highest_weight(hw);
    return true;
  } catch (const InvalidWeight&) {
    return false;
  }
}

HighestWeight parse_highest_weight(int n, std::string_view list) {
  HighestWeight hw{n, {}};
  while (true) {
    auto comma = list.find(',');
    hw.twice.push_back(parse_half_int(list.substr(0, comma)).twice);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  validate_highest_weight(hw);
  return hw;
}

Integer weyl_dim(const HighestWeight& hw) {
  validate_highest_weight(hw);
  const int n = hw.n;
  // doubled standard weight, then doubled l_i = mu_i + n - i
  std::vector<std::int64_t> ell(n), rho(n);
  for (int i = 1; i <= n; ++i) {
    std::int64_t mu = (i < n) ? -hw.twice[n - i] : hw.twice[0];
    rho[i - 1] = 2 * (n - i);
    ell[i - 1] = mu + rho[i - 1];
  }
  Rational num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= Rational(static_cast<long>(ell[i] - ell[j])) * Rational(static_cast<long>(ell[i] + ell[j]));
      den *= Rational(static_cast<long>(rho[i] - rho[j])) * Rational(static_cast<long>(rho[i] + rho[j]));
    }
  Rational d = num / den;
  if (d.get_den() != 1) throw Error("Weyl dimension is not an integer for " + hw.str());
  return d.get_num();
}

BranchingTable branching(const HighestWeight& hw) {
  validate_highest_weight(hw);
  if (hw.n < 2) throw InvalidWeight("branching needs n >= 2");
  const int m = hw.n - 1;
  const auto& L = hw.twice;
  BranchingTable table;
  std::vector<std::int64_t> nu(m), mu(m);

  // mu_1 in [nu_1, -nu_1], mu_i in [nu_i, nu_{i-1}]
  std::function<void(int)> pick_mu = [&](int i) {
    if (i == m) {
      ++table[mu];
      return;
    }
    std::int64_t hi = (i == 0) ? -nu[0] : nu[i - 1];
    for (std::int64_t v = nu[i]; v <= hi; v += 2) {
      mu[i] = v;
      pick_mu(i + 1);
    }
  };
  // nu_1 in [l_2, -|l_1|], nu_i in [l_{i+1}, l_i]
  std::function<void(int)> pick_nu = [&](int i) {
    if (i == m) {
      pick_mu(0);
      return;
    }
    std::int64_t hi = (i == 0) ? -std::abs(L[0]) : L[i];
    for (std::int64_t v = L[i + 1]; v <= hi; v += 2) {
      nu[i] = v;
      pick_nu(i + 1);
    }
  };
  pick_nu(0);
  return table;
}

}  // namespace o2n
