#include "o2n/operators.hpp"

#include <map>

#include "o2n/coefficients.hpp"
#include "o2n/error.hpp"
#include "o2n/kernels.hpp"

namespace o2n {

namespace {

using D = Pattern::Delta;

template <class T>
using Acc = std::map<std::uint32_t, T>;

template <class T, class ColumnFn>
BasicSparse<T> build_by_columns(const PatternBasis& basis, int jobs, ColumnFn&& fn) {
  auto cols = kernels::map_columns<Acc<T>>(basis.size(), jobs, fn);
  BasicSparse<T> op(basis.size());
  for (std::size_t s = 0; s < cols.size(); ++s) op.assign_column(s, cols[s]);
  return op;
}

void check_level(const PatternBasis& basis, int k, int lo) {
  if (k < lo || k > basis.n())
    throw std::out_of_range("level k=" + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                            std::to_string(basis.n()));
}

Rational q(HalfInt h) { return h.to_rational(); }

// Exponents (a, b) of a level-2 tower vector F21^a F(1,-2)^b xi, doubled.
struct Tower {
  std::int64_t mu1, mu2, x, y;  // lam_21, lam_22, lam'_11, lam_11
};

Tower tower_of(const Pattern& p) { return {p.lam2(2, 1), p.lam2(2, 2), p.prime2(1, 1), p.lam2(1, 1)}; }

std::int64_t exp_a(const Tower& t) { return std::max(t.mu1, t.y) - t.y + t.x - t.mu2; }
std::int64_t exp_b(const Tower& t) { return std::max(t.mu1, t.y) - t.mu1 + t.x - t.mu2; }

// Inverse of (x, y) -> (a, b) within the tower; the result may be invalid.
Pattern tower_vector(const Pattern& p, std::int64_t a, std::int64_t b) {
  const Tower t = tower_of(p);
  std::int64_t y = t.mu1 - a + b;
  std::int64_t x = a - std::max(t.mu1, y) + y + t.mu2;
  return p.shifted({D{true, 1, 1, static_cast<int>((x - t.x) / 2)}, D{false, 1, 1, static_cast<int>((y - t.y) / 2)}});
}

}  // namespace

SparseOperator matrix_F_diag(const PatternBasis& basis, int k) {
  check_level(basis, k, 1);
  SparseOperator op(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    Rational w = q(basis.weight_of(s)[k - 1]);
    if (!is_zero(w)) op.set_column(s, {{static_cast<std::uint32_t>(s), w}});
  }
  return op;
}

SparseOperator matrix_F_lower(const PatternBasis& basis, int k, int jobs) {
  check_level(basis, k, 2);
  return build_by_columns<Rational>(basis, jobs, [&](std::size_t s) {
    const Pattern& p = basis[s];
    Acc<Rational> acc;
    for (int i = 1; i <= k - 1; ++i) {
      Rational a = coeff_A(p, k, i);
      const LinComb zp = zeta_plus(p, k, i), zm = zeta_minus(p, k, i);
      for (const auto& [pt, c] : zp.terms())
        if (auto t = basis.find(pt)) acc[*t] += a * c;
      for (const auto& [pt, c] : zm.terms())
        if (auto t = basis.find(pt)) acc[*t] -= a * c;
    }
    return acc;
  });
}

SparseOperator matrix_Phi_down(const PatternBasis& basis, int k, int jobs) {
  check_level(basis, k, 2);
  return build_by_columns<Rational>(basis, jobs, [&](std::size_t s) {
    const Pattern& p = basis[s];
    Acc<Rational> acc;
    for (int i = 1; i <= k - 1; ++i) {
      auto t = basis.find(p.shifted({D{true, k - 1, i, -1}}));
      if (!t) continue;
      Rational w = q(basis.weight_of(*t)[k - 1]);
      acc[*t] += coeff_C(p, k, i) * (w - q(p.lp(k - 1, i)) + 2);
    }
    return acc;
  });
}

ParamOperator matrix_Phi_param(const PatternBasis& basis, int k, int jobs) {
  check_level(basis, k, 2);
  return build_by_columns<RationalFunction>(basis, jobs, [&](std::size_t s) {
    const Pattern& p = basis[s];
    Acc<RationalFunction> acc;
    for (int i = 1; i <= k - 1; ++i) {
      const Rational a = coeff_A(p, k, i), l = q(p.l(k - 1, i));
      const LinComb zp = zeta_plus(p, k, i), zm = zeta_minus(p, k, i);
      for (const auto& [pt, c] : zp.terms())
        if (auto t = basis.find(pt)) {
          Rational w = q(basis.weight_of(*t)[k - 1]);
          acc[*t] += RationalFunction::simple_pole(a * c, l + w - 1);
        }
      for (const auto& [pt, c] : zm.terms())
        if (auto t = basis.find(pt)) {
          Rational w = q(basis.weight_of(*t)[k - 1]);
          acc[*t] -= RationalFunction::simple_pole(a * c, -l + w - 1);
        }
    }
    return acc;
  });
}

SparseOperator regularized_commutator(const PatternBasis& basis, int k, int jobs) {
  const ParamOperator phi = matrix_Phi_param(basis, k, jobs);
  const SparseOperator down = matrix_Phi_down(basis, k, jobs);
  ParamOperator phi2(basis.size()), downp(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    ParamOperator::Column c2, cd;
    for (const auto& e : phi.column(s)) c2.push_back({e.target, e.value.shifted(2)});
    for (const auto& e : down.column(s)) cd.push_back({e.target, RationalFunction(e.value)});
    phi2.set_column(s, std::move(c2));
    downp.set_column(s, std::move(cd));
  }
  using Col = SparseOperator::Column;
  auto cols = kernels::map_columns<Col>(basis.size(), jobs, [&](std::size_t s) {
    ParamOperator::Column m = kernels::product_column(phi2, downp, s);
    for (auto& e : kernels::product_column(downp, phi, s)) m.push_back({e.target, -e.value});
    ParamOperator::normalize(m);
    Col out;
    for (const auto& e : m) {
      if (e.value.has_pole_at(0)) throw RegularizationError(k, s, e.target, e.value.str());
      out.push_back({e.target, rf_eval(e.value, 0)});
    }
    return out;
  });
  return kernels::assemble<Rational>(std::move(cols));
}

std::vector<std::size_t> degenerate_columns(const PatternBasis& basis, int k) {
  check_level(basis, k, 2);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const std::int64_t w = basis.weight_of(s)[k - 1].twice;
    for (int i = 1; i <= k - 1; ++i) {
      const std::int64_t l = basis[s].l(k - 1, i).twice;
      if (w + l == 0 || w - l == 0) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

SparseOperator g2_F21(const PatternBasis& basis) {
  check_level(basis, 2, 2);
  SparseOperator op(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const Tower t = tower_of(basis[s]);
    if (auto tgt = basis.find(tower_vector(basis[s], exp_a(t) + 2, exp_b(t))))
      op.set_column(s, {{static_cast<std::uint32_t>(*tgt), Rational(1)}});
  }
  return op;
}

SparseOperator g2_Fm21(const PatternBasis& basis) {
  check_level(basis, 2, 2);
  SparseOperator op(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const Tower t = tower_of(basis[s]);
    const std::int64_t a = exp_a(t), b = exp_b(t);
    if (b < 2) continue;
    // sl2 string of length m2 = -mu1 - mu2: f-string vector b maps to b (m2 - b + 1) times b - 1
    const Rational bb = make_rational(b, 2), m2 = make_rational(-t.mu1 - t.mu2, 2);
    if (auto tgt = basis.find(tower_vector(basis[s], a, b - 2)))
      op.set_column(s, {{static_cast<std::uint32_t>(*tgt), Rational(bb * (m2 - bb + 1))}});
  }
  return op;
}

}  // namespace o2n
