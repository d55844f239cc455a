#include "o2n/verify.hpp"

#include <deque>

#include "o2n/error.hpp"
#include "o2n/kernels.hpp"
#include "o2n/linalg.hpp"
#include "o2n/structure_constants.hpp"

namespace o2n {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

std::string entry(std::size_t t, std::size_t s) {
  return "(target " + std::to_string(t) + ", source " + std::to_string(s) + ")";
}

std::vector<int> signed_indices(int n) {
  std::vector<int> v;
  for (int i = -n; i <= n; ++i)
    if (i != 0) v.push_back(i);
  return v;
}

// first differing entry of a and b, if any
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseOperator& a, const SparseOperator& b) {
  for (std::size_t s = 0; s < a.dim(); ++s) {
    if (a.column(s) == b.column(s)) continue;
    std::map<std::uint32_t, Rational> d;
    for (const auto& e : a.column(s)) d[e.target] += e.value;
    for (const auto& e : b.column(s)) d[e.target] -= e.value;
    for (const auto& [t, v] : d)
      if (!is_zero(v)) return std::make_pair(std::size_t{t}, s);
  }
  return std::nullopt;
}

VerifyReport report(std::string suite, const Representation& rep) { return VerifyReport{std::move(suite), rep.highest_weight(), true, {}}; }

bool all_cached(const Representation& rep, VerifyReport& r) {
  for (Gen g : rep.missing()) r.fail(g.label(), "constructed", "missing");
  return r.pass;
}

SparseOperator casimir_operator(const Representation& rep) {
  SparseOperator omega(rep.dim());
  const auto idx = signed_indices(rep.n());
  for (int i : idx)
    for (int j : idx) omega += kernels::multiply(rep.gen({i, j}), rep.gen({j, i}));
  return omega;
}

}  // namespace

void VerifyReport::fail(std::string where, std::string expected, std::string got) {
  pass = false;
  if (counterexamples.size() < kMaxCounterexamples)
    counterexamples.push_back({std::move(where), std::move(expected), std::move(got)});
}

VerifyReport check_brackets(const Representation& rep, int jobs) {
  VerifyReport r = report("brackets", rep);
  if (!all_cached(rep, r)) return r;
  const StructureConstants sc(rep.n());
  const auto& gens = sc.generators();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) pairs.emplace_back(a, b);

  auto results = kernels::map_columns<std::optional<Counterexample>>(pairs.size(), jobs, [&](std::size_t p) {
    auto [a, b] = pairs[p];
    const SparseOperator& x = *rep.cache()[a];
    const SparseOperator& y = *rep.cache()[b];
    SparseOperator lhs = kernels::commutator(x, y);
    SparseOperator rhs(rep.dim());
    for (const auto& [h, c] : sc.bracket(a, b)) rhs.axpy(c, *rep.cache()[h]);
    std::optional<Counterexample> ce;
    if (auto d = first_difference(lhs, rhs)) {
      auto [t, s] = *d;
      ce = Counterexample{"[" + gens[a].label() + "," + gens[b].label() + "] " + entry(t, s), to_string(rhs.at(t, s)),
                          to_string(lhs.at(t, s))};
    }
    return ce;
  });
  for (auto& ce : results)
    if (ce) r.fail(ce->where, ce->expected, ce->got);
  return r;
}

VerifyReport check_weights(const Representation& rep) {
  VerifyReport r = report("weights", rep);
  if (!all_cached(rep, r)) return r;
  const auto& basis = rep.basis();
  const auto& gens = canonical_generators(rep.n());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    const auto rt = root(rep.n(), gens[a]);
    const SparseOperator& op = *rep.cache()[a];
    for (std::size_t s = 0; s < op.dim(); ++s)
      for (const auto& e : op.column(s)) {
        const auto& ws = basis.weight_of(s);
        const auto& wt = basis.weight_of(e.target);
        for (int k = 0; k < rep.n(); ++k) {
          if (wt[k].twice - ws[k].twice == 2 * rt[k]) continue;
          r.fail(gens[a].label() + " " + entry(e.target, s) + " component " + std::to_string(k + 1),
                 std::to_string(rt[k]), (wt[k] - ws[k]).str());
          break;
        }
      }
  }
  return r;
}

VerifyReport check_highest(const Representation& rep) {
  VerifyReport r = report("highest", rep);
  if (!all_cached(rep, r)) return r;
  const auto xi = rep.basis().find(xi_pattern(rep.highest_weight()));
  if (!xi) {
    r.fail("xi-pattern", "in basis", "absent");
    return r;
  }
  const int n = rep.n();
  for (int i : signed_indices(n))
    for (int j : signed_indices(n)) {
      if (!is_raising(n, {i, j})) continue;
      const SparseOperator x = rep.gen({i, j});
      for (const auto& e : x.column(*xi))
        r.fail(Gen{i, j}.label() + " xi -> " + std::to_string(e.target), "0", to_string(e.value));
    }
  for (int k = 1; k <= n; ++k) {
    const SparseOperator f = rep.gen({k, k});
    const Rational want = rep.highest_weight().at(k).to_rational();
    SparseOperator::Column expect;
    if (!is_zero(want)) expect.push_back({static_cast<std::uint32_t>(*xi), want});
    if (f.column(*xi) != expect)
      r.fail(Gen{k, k}.label() + " on xi", to_string(want), to_string(f.at(*xi, *xi)) + " (column of " +
                                                                std::to_string(f.column(*xi).size()) + " entries)");
  }
  return r;
}

VerifyReport check_dimension(const Representation& rep) {
  VerifyReport r = report("dim", rep);
  const HighestWeight& hw = rep.highest_weight();
  const Integer d = weyl_dim(hw);
  if (d != static_cast<unsigned long>(rep.dim())) r.fail("pattern count", d.get_str(), std::to_string(rep.dim()));
  if (hw.n >= 2) {
    Integer total = 0;
    for (const auto& [mu, c] : branching(hw)) total += weyl_dim({hw.n - 1, mu}) * static_cast<unsigned long>(c);
    if (total != d) r.fail("sum c(mu) dim V'(mu)", d.get_str(), total.get_str());
  }
  return r;
}

VerifyReport check_branching(const Representation& rep) {
  VerifyReport r = report("branching", rep);
  const HighestWeight& hw = rep.highest_weight();
  if (hw.n < 2) return r;
  const BranchingTable table = branching(hw);
  Integer total = 0;
  for (const auto& [mu, c] : table) total += weyl_dim({hw.n - 1, mu}) * static_cast<unsigned long>(c);
  if (total != weyl_dim(hw)) r.fail("sum c(mu) dim V'(mu)", weyl_dim(hw).get_str(), total.get_str());
  // the basis itself: patterns with second row mu number c(mu) dim V'(mu)
  std::map<std::vector<std::int64_t>, std::uint64_t> seen;
  for (const auto& p : rep.basis().patterns()) {
    auto row = p.rows()[2];
    ++seen[row];
  }
  auto label = [&](const std::vector<std::int64_t>& mu) { return HighestWeight{hw.n - 1, mu}.str(); };
  for (const auto& [mu, c] : table) {
    Integer want = weyl_dim({hw.n - 1, mu}) * static_cast<unsigned long>(c);
    auto it = seen.find(mu);
    std::uint64_t got = it == seen.end() ? 0 : it->second;
    if (want != static_cast<unsigned long>(got)) r.fail("patterns with row " + label(mu), want.get_str(), std::to_string(got));
  }
  for (const auto& [mu, got] : seen)
    if (!table.count(mu)) r.fail("patterns with row " + label(mu), "0", std::to_string(got));
  return r;
}

Rational casimir_closed_form(const HighestWeight& hw) {
  const int n = hw.n;
  auto hat = [&](int i) { return i > 0 ? hw.at(i).to_rational() : Rational(-hw.at(-i).to_rational()); };
  Rational omega = 0;
  for (int k = 1; k <= n; ++k) omega += 2 * hat(k) * hat(k);
  const auto idx = signed_indices(n);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] != -idx[b]) omega += hat(idx[a]) - hat(idx[b]);
  return omega;
}

Rational casimir_defining(int n) {
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  DenseMatrix omega(d, std::vector<Rational>(d));
  const auto idx = signed_indices(n);
  for (int i : idx)
    for (int j : idx) {
      DenseMatrix a = defining_matrix(n, {i, j}), b = defining_matrix(n, {j, i});
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k)
          if (!is_zero(a[r][k]))
            for (std::size_t c = 0; c < d; ++c) omega[r][c] += a[r][k] * b[k][c];
    }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if ((r == c && omega[r][c] != omega[0][0]) || (r != c && !is_zero(omega[r][c])))
        throw Error("Casimir of the defining representation is not scalar");
  return omega[0][0];
}

std::optional<Rational> casimir_scalar(const Representation& rep) {
  const SparseOperator omega = casimir_operator(rep);
  const Rational c = omega.at(0, 0);
  for (std::size_t s = 0; s < omega.dim(); ++s) {
    SparseOperator::Column want;
    if (!is_zero(c)) want.push_back({static_cast<std::uint32_t>(s), c});
    if (omega.column(s) != want) return std::nullopt;
  }
  return c;
}

VerifyReport check_casimir(const Representation& rep) {
  VerifyReport r = report("casimir", rep);
  if (!all_cached(rep, r)) return r;
  const SparseOperator omega = casimir_operator(rep);
  const Rational want = casimir_closed_form(rep.highest_weight());
  for (std::size_t s = 0; s < omega.dim(); ++s) {
    SparseOperator::Column expect;
    if (!is_zero(want)) expect.push_back({static_cast<std::uint32_t>(s), want});
    if (omega.column(s) == expect) continue;
    for (const auto& e : omega.column(s))
      if (e.target != s) r.fail("Omega " + entry(e.target, s), "0", to_string(e.value));
    if (omega.at(s, s) != want) r.fail("Omega " + entry(s, s), to_string(want), to_string(omega.at(s, s)));
  }
  return r;
}

std::size_t cyclic_span_rank(const Representation& rep) {
  const auto xi = rep.basis().find(xi_pattern(rep.highest_weight()));
  if (!xi) return 0;
  std::vector<SparseOperator> ops;
  for (const auto& op : rep.cache())
    if (op) ops.push_back(*op);
  EchelonBasis span;
  std::deque<SparseVector> queue;
  SparseVector start{{static_cast<std::uint32_t>(*xi), Rational(1)}};
  span.insert(start);
  queue.push_back(start);
  while (!queue.empty() && span.rank() < rep.dim()) {
    SparseVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      SparseVector w = apply_operator(op, v);
      if (!w.empty() && span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span.rank();
}

VerifyReport check_irreducible(const Representation& rep) {
  VerifyReport r = report("irreducible", rep);
  if (!all_cached(rep, r)) return r;
  const std::size_t rank = cyclic_span_rank(rep);
  if (rank != rep.dim()) r.fail("span of generators applied to xi", std::to_string(rep.dim()), std::to_string(rank));
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dim", "branching", "highest", "weights", "brackets", "casimir", "irreducible"};
  return names;
}

std::vector<VerifyReport> run_suite(const Representation& rep, std::string_view suite, int jobs) {
  if (suite == "all") {
    std::vector<VerifyReport> out;
    for (const auto& s : suite_names()) out.push_back(run_suite(rep, s, jobs).front());
    return out;
  }
  if (suite == "brackets") return {check_brackets(rep, jobs)};
  if (suite == "weights") return {check_weights(rep)};
  if (suite == "highest") return {check_highest(rep)};
  if (suite == "dim") return {check_dimension(rep)};
  if (suite == "branching") return {check_branching(rep)};
  if (suite == "casimir") return {check_casimir(rep)};
  if (suite == "irreducible") return {check_irreducible(rep)};
  throw ParseError("unknown suite '" + std::string(suite) + "'");
}

namespace {

void bump(Representation& rep, Gen g, std::size_t t, std::size_t s, const Rational& by) {
  SparseOperator op = rep.gen(g);
  SparseOperator::Column col = op.column(s);
  col.push_back({static_cast<std::uint32_t>(t), by});
  op.set_column(s, std::move(col));
  rep.set(g, std::move(op));
}

Representation drop_last_pattern(const Representation& rep) {
  std::vector<Pattern> pats = rep.basis().patterns();
  pats.pop_back();
  return Representation(rep.highest_weight(), PatternBasis(rep.highest_weight(), std::move(pats)));
}

}  // namespace

std::vector<MutationOutcome> mutation_self_test(const Representation& rep) {
  std::vector<MutationOutcome> out;
  const int n = rep.n();
  const std::size_t xi = rep.basis().index_of(xi_pattern(rep.highest_weight()));
  auto mutated = [&](auto&& change) {
    Representation m = rep;
    change(m);
    return m;
  };
  const Gen raising = n >= 2 ? Gen{1, 2} : Gen{1, 1};

  if (n >= 2) {
    Representation m = mutated([&](Representation& x) { bump(x, {1, 1}, xi, xi, 1); });
    out.push_back({"brackets", "F(1,1)[xi,xi] += 1", !check_brackets(m).pass});
    m = mutated([&](Representation& x) { bump(x, raising, xi, xi, 1); });
    out.push_back({"weights", "F(1,2)[xi,xi] += 1", !check_weights(m).pass});
    out.push_back({"highest", "F(1,2)[xi,xi] += 1", !check_highest(m).pass});
  }
  {
    // Omega[xi,xi] moves by 2c(2 lambda_1 + c); avoid c = -2 lambda_1
    const Rational l1 = rep.highest_weight().at(1).to_rational();
    const Rational c = (2 * l1 + 1 == 0) ? 2 : 1;
    Representation m = mutated([&](Representation& x) { bump(x, {1, 1}, xi, xi, c); });
    out.push_back({"casimir", "F(1,1)[xi,xi] += " + to_string(c), !check_casimir(m).pass});
  }
  if (rep.dim() > 1) {
    // zero one entry of the xi column whose loss disconnects the span
    MutationOutcome mo{"irreducible", "no single xi-column entry is essential", false, false};
    const auto& gens = canonical_generators(n);
    for (std::size_t a = 0; a < gens.size() && !mo.detected; ++a)
      for (const auto& e : rep.cache()[a]->column(xi)) {
        if (e.target == xi) continue;
        Representation m = mutated([&](Representation& x) { bump(x, gens[a], e.target, xi, -e.value); });
        if (!check_irreducible(m).pass) {
          mo = {"irreducible", gens[a].label() + " " + entry(e.target, xi) + " := 0", true};
          break;
        }
      }
    out.push_back(mo);
  }
  if (rep.dim() > 1) {
    Representation m = drop_last_pattern(rep);
    out.push_back({"dim", "last basis pattern removed", !check_dimension(m).pass});
    if (n >= 2) out.push_back({"branching", "last basis pattern removed", !check_branching(m).pass});
  }
  return out;
}

}  // namespace o2n
