#include "o2n/linalg.hpp"

namespace o2n {

SparseOperator diagonal(const std::vector<Rational>& d) {
  SparseOperator op(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!is_zero(d[i])) op.set_column(i, {{static_cast<std::uint32_t>(i), d[i]}});
  return op;
}

SparseVector apply_operator(const SparseOperator& a, const SparseVector& v) {
  SparseVector out;
  for (const auto& [s, c] : v)
    for (const auto& e : a.column(s)) {
      Rational& slot = out[e.target];
      slot += c * e.value;
      if (is_zero(slot)) out.erase(e.target);
    }
  return out;
}

namespace {
// v -= c * row
void subtract_scaled(SparseVector& v, const Rational& c, const SparseVector& row) {
  for (const auto& [j, x] : row) {
    Rational& slot = v[j];
    slot -= c * x;
    if (is_zero(slot)) v.erase(j);
  }
}
}  // namespace

void EchelonBasis::reduce(SparseVector& v) const {
  // Rows carry entries only at or after their pivot, so one ascending pass suffices.
  for (auto it = rows_.begin(); it != rows_.end() && !v.empty(); ++it) {
    auto hit = v.find(it->first);
    if (hit == v.end()) continue;
    Rational c = hit->second;
    subtract_scaled(v, c, it->second);
  }
}

bool EchelonBasis::insert(SparseVector v) {
  reduce(v);
  if (v.empty()) return false;
  const std::uint32_t pivot = v.begin()->first;
  Rational inv = 1 / v.begin()->second;
  for (auto& [j, x] : v) x *= inv;
  rows_.emplace(pivot, std::move(v));
  return true;
}

Solution solve(const LinearSystem& sys) {
  const auto rhs_col = static_cast<std::uint32_t>(sys.unknowns);
  EchelonBasis eb;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    SparseVector row = sys.rows[r];
    if (!is_zero(sys.rhs[r])) row[rhs_col] = sys.rhs[r];
    eb.insert(std::move(row));
  }
  Solution sol;
  sol.x.assign(sys.unknowns, Rational(0));
  if (eb.rows().count(rhs_col)) return sol;  // 0 = nonzero
  sol.consistent = true;
  sol.free_unknowns = sys.unknowns - eb.rank();
  // back substitution, highest pivot first
  for (auto it = eb.rows().rbegin(); it != eb.rows().rend(); ++it) {
    Rational val = 0;
    for (const auto& [j, a] : it->second) {
      if (j == it->first) continue;
      if (j == rhs_col) val += a;
      else val -= a * sol.x[j];
    }
    sol.x[it->first] = val;
  }
  return sol;
}

}  // namespace o2n
