#include "o2n/structure_constants.hpp"

#include "o2n/error.hpp"

namespace o2n {

namespace {

DenseMatrix zero(int n) { return DenseMatrix(2 * n, std::vector<Rational>(2 * n)); }

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t d = a.size();
  DenseMatrix r(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (!is_zero(a[i][k]))
        for (std::size_t j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
      if (!is_zero(b[i][k]))
        for (std::size_t j = 0; j < d; ++j) r[i][j] -= b[i][k] * a[k][j];
    }
  return r;
}

}  // namespace

DenseMatrix defining_matrix(int n, Gen g) {
  DenseMatrix m = zero(n);
  m[index_rank(n, g.i)][index_rank(n, g.j)] += 1;
  m[index_rank(n, -g.j)][index_rank(n, -g.i)] -= 1;
  return m;
}

GenExpansion expand_in_generators(int n, const DenseMatrix& m) {
  // F(i,j) is the only canonical generator with a nonzero (i,j) entry
  // (besides its partner F(-j,-i), which is not canonical), so read it off.
  const auto& gens = canonical_generators(n);
  GenExpansion out;
  DenseMatrix rest = m;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    Rational c = m[index_rank(n, gens[a].i)][index_rank(n, gens[a].j)];
    if (is_zero(c)) continue;
    out.emplace_back(a, c);
    DenseMatrix f = defining_matrix(n, gens[a]);
    for (std::size_t r = 0; r < rest.size(); ++r)
      for (std::size_t s = 0; s < rest.size(); ++s) rest[r][s] -= c * f[r][s];
  }
  for (const auto& row : rest)
    for (const auto& x : row)
      if (!is_zero(x)) throw ExpansionError("matrix is not in the span of the o(2n) generators");
  return out;
}

StructureConstants::StructureConstants(int n) : n_(n), gens_(canonical_generators(n)) {
  const std::size_t N = gens_.size();
  std::vector<DenseMatrix> mats;
  for (const auto& g : gens_) mats.push_back(defining_matrix(n, g));
  table_.resize(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) table_[a * N + b] = expand_in_generators(n, commutator(mats[a], mats[b]));
}

GenExpansion StructureConstants::bracket(Gen g, Gen h) const {
  auto rg = canonical_ref(n_, g), rh = canonical_ref(n_, h);
  if (!rg || !rh) return {};
  GenExpansion out = bracket(rg->index, rh->index);
  for (auto& [idx, c] : out) c *= rg->sign * rh->sign;
  return out;
}

}  // namespace o2n
