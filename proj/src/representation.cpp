#include "o2n/representation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "o2n/error.hpp"
#include "o2n/kernels.hpp"
#include "o2n/linalg.hpp"
#include "o2n/operators.hpp"

namespace o2n {

Representation::Representation(const HighestWeight& hw) : Representation(hw, PatternBasis(hw)) {}

Representation::Representation(const HighestWeight& hw, PatternBasis basis)
    : basis_(std::move(basis)), cache_(canonical_generators(hw.n).size()) {}

bool Representation::has(Gen g) const {
  auto ref = canonical_ref(n(), g);
  return !ref || cache_[ref->index].has_value();
}

SparseOperator Representation::gen(Gen g) const {
  auto ref = canonical_ref(n(), g);
  if (!ref) return SparseOperator(dim());
  const auto& op = cache_[ref->index];
  if (!op) throw NotFound(g.label() + " has not been constructed");
  return ref->sign > 0 ? *op : -*op;
}

void Representation::set(Gen g, SparseOperator op) {
  auto ref = canonical_ref(n(), g);
  if (!ref) throw std::invalid_argument(g.label() + " is identically zero");
  if (op.dim() != dim()) throw std::invalid_argument("operator dimension mismatch for " + g.label());
  cache_[ref->index] = ref->sign > 0 ? std::move(op) : -op;
}

std::vector<Gen> Representation::missing() const {
  std::vector<Gen> out;
  const auto& gens = canonical_generators(n());
  for (std::size_t a = 0; a < gens.size(); ++a)
    if (!cache_[a]) out.push_back(gens[a]);
  return out;
}

namespace {

int height(Gen g) { return std::max(std::abs(g.i), std::abs(g.j)); }

SparseOperator combination(const Representation& rep, const GenExpansion& ex,
                           std::optional<std::size_t> skip = std::nullopt) {
  SparseOperator out(rep.dim());
  for (const auto& [h, c] : ex)
    if (h != skip) out.axpy(c, *rep.cache()[h]);
  return out;
}

}  // namespace

std::size_t close_partial(Representation& rep, const StructureConstants& sc, int limit, ClosureOrder order,
                          int jobs) {
  const auto& gens = sc.generators();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (limit <= 0 || (height(gens[a]) <= limit && height(gens[b]) <= limit)) pairs.emplace_back(a, b);
  if (order == ClosureOrder::Reverse) std::reverse(pairs.begin(), pairs.end());

  std::size_t added = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : pairs) {
      const auto& X = rep.cache()[a];
      const auto& Y = rep.cache()[b];
      if (!X || !Y) continue;
      const GenExpansion& ex = sc.bracket(a, b);
      std::optional<std::size_t> unknown;
      std::size_t n_unknown = 0;
      Rational coef;
      for (const auto& [h, c] : ex)
        if (!rep.cache()[h]) {
          ++n_unknown;
          unknown = h;
          coef = c;
        }
      if (n_unknown != 1) continue;
      // c F_g = [X, Y] - sum_{h != g} c_h F_h
      SparseOperator m = kernels::commutator(*X, *Y, jobs) - combination(rep, ex, unknown);
      m *= Rational(1 / coef);
      rep.slot(*unknown) = std::move(m);
      ++added;
      changed = true;
    }
  }
  return added;
}

void close_generators(Representation& rep, const StructureConstants& sc, ClosureOrder order, int jobs) {
  close_partial(rep, sc, 0, order, jobs);
  auto miss = rep.missing();
  if (!miss.empty()) {
    std::vector<std::string> labels;
    for (auto g : miss) labels.push_back(g.label());
    throw ClosureIncomplete(std::move(labels));
  }
}

RaiseResult matrix_F_raise(const Representation& rep, const StructureConstants& sc, int k, int jobs) {
  const PatternBasis& basis = rep.basis();
  const int n = rep.n();
  RaiseResult res{regularized_commutator(basis, k, jobs), degenerate_columns(basis, k), 0};
  if (res.degenerate.empty()) return res;
  const SparseOperator literal = res.op;

  // Unknown entries: degenerate source s, target t of weight w(s) + e_{k-1} - e_k
  // with every row from level k up unchanged (same o(2k) module).
  const std::size_t prefix = Pattern::lam_offset(n, k) + k;
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> unknown;  // (t, s) -> index
  std::vector<std::pair<std::size_t, std::size_t>> unknown_at;
  SparseOperator x0 = res.op;
  for (std::size_t s : res.degenerate) {
    x0.set_column(s, {});
    std::vector<HalfInt> w = basis.weight_of(s);
    w[k - 2] += HalfInt::from_int(1);
    w[k - 1] -= HalfInt::from_int(1);
    const auto& fs = basis[s].flat();
    for (std::size_t t = 0; t < basis.size(); ++t) {
      const auto& ft = basis[t].flat();
      if (basis.weight_of(t) != w || !std::equal(fs.begin(), fs.begin() + prefix, ft.begin())) continue;
      unknown[{t, s}] = static_cast<std::uint32_t>(unknown_at.size());
      unknown_at.emplace_back(t, s);
    }
  }

  // [X0 + U, f] = sum_h c_h F_h for each simple lowering f of o(2k):
  //   U f - f U = rhs := sum_h c_h F_h - X0 f + f X0
  std::vector<Gen> lowering;
  for (int j = 1; j < k; ++j) lowering.push_back({j + 1, j});
  lowering.push_back({2, -1});
  LinearSystem sys;
  sys.unknowns = unknown_at.size();
  for (Gen f_label : lowering) {
    const SparseOperator f = rep.gen(f_label);
    GenExpansion ex = sc.bracket(Gen{k - 1, k}, f_label);
    SparseOperator rhs = combination(rep, ex) - kernels::multiply(x0, f, jobs) + kernels::multiply(f, x0, jobs);
    // row access to f: f_rows[s] = {(m, f[s][m])}
    std::vector<std::vector<std::pair<std::size_t, Rational>>> f_rows(rep.dim());
    for (std::size_t m = 0; m < rep.dim(); ++m)
      for (const auto& e : f.column(m)) f_rows[e.target].emplace_back(m, e.value);

    std::map<std::pair<std::size_t, std::size_t>, SparseVector> eq;  // (row t, column m)
    auto bump = [&](std::pair<std::size_t, std::size_t> at, std::uint32_t u, const Rational& v) {
      Rational& slot = eq[at][u];
      slot += v;
    };
    for (std::uint32_t u = 0; u < unknown_at.size(); ++u) {
      auto [t, s] = unknown_at[u];
      for (const auto& [m, v] : f_rows[s]) bump({t, m}, u, v);  // (U f)[t,m]
      for (const auto& e : f.column(t)) bump({e.target, s}, u, -e.value);  // (f U)[t',s]
    }
    for (std::size_t m = 0; m < rep.dim(); ++m)
      for (const auto& e : rhs.column(m)) eq[{e.target, m}];  // entries with no unknowns must vanish
    for (auto& [at, row] : eq) {
      std::erase_if(row, [](const auto& kv) { return is_zero(kv.second); });
      Rational b = rhs.at(at.first, at.second);
      if (row.empty() && is_zero(b)) continue;
      sys.add(std::move(row), std::move(b));
    }
  }
  Solution sol = solve(sys);
  if (!sol.consistent)
    throw CompletionError("F(" + std::to_string(k - 1) + "," + std::to_string(k) +
                          "): bracket relations on degenerate columns are inconsistent");
  if (sol.free_unknowns != 0)
    throw CompletionError("F(" + std::to_string(k - 1) + "," + std::to_string(k) + "): " +
                          std::to_string(sol.free_unknowns) + " entries left undetermined");

  std::map<std::size_t, SparseOperator::Column> cols;
  for (std::uint32_t u = 0; u < unknown_at.size(); ++u) {
    auto [t, s] = unknown_at[u];
    cols[s].push_back({static_cast<std::uint32_t>(t), sol.x[u]});
  }
  for (auto& [s, col] : cols) x0.set_column(s, std::move(col));
  res.op = std::move(x0);
  for (std::size_t s : res.degenerate) {
    SparseOperator::Column a = literal.column(s), b = res.op.column(s);
    std::map<std::uint32_t, Rational> diff;
    for (auto& e : a) diff[e.target] += e.value;
    for (auto& e : b) diff[e.target] -= e.value;
    for (auto& [t, v] : diff) res.changed_entries += !is_zero(v);
  }
  return res;
}

Representation build_representation(const HighestWeight& hw, const BuildOptions& opt) {
  Representation rep(hw);
  const int n = hw.n;
  const StructureConstants sc(n);
  for (int k = 1; k <= n; ++k) rep.set({k, k}, matrix_F_diag(rep.basis(), k));
  if (n >= 2) {
    rep.set({2, 1}, g2_F21(rep.basis()));
    rep.set({-2, 1}, g2_Fm21(rep.basis()));
  }
  // Level by level: F(k-1,k) at level k needs F(k,k-1), which closure
  // produces from F(k-1,-k) and the generators of o(2k-2).
  for (int k = 2; k <= n; ++k) {
    rep.set({k - 1, -k}, matrix_F_lower(rep.basis(), k, opt.jobs));
    close_partial(rep, sc, k, opt.order, opt.jobs);
    rep.set({k - 1, k}, matrix_F_raise(rep, sc, k, opt.jobs).op);
    close_partial(rep, sc, k, opt.order, opt.jobs);
  }
  close_generators(rep, sc, opt.order, opt.jobs);
  return rep;
}

}  // namespace o2n
