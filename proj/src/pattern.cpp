#include "o2n/pattern.hpp"

#include <algorithm>
#include <functional>

#include "o2n/error.hpp"

namespace o2n {

namespace {
std::size_t range_sum(int a, int b) { return b < a ? 0 : static_cast<std::size_t>((a + b) * (b - a + 1) / 2); }
std::size_t flat_size(int n) { return static_cast<std::size_t>(n) * n; }
}  // namespace

std::size_t Pattern::lam_offset(int n, int k) { return range_sum(k + 1, n) + range_sum(k, n - 1); }
std::size_t Pattern::prime_offset(int n, int k) { return range_sum(k + 1, n) + range_sum(k + 1, n - 1); }

Pattern::Pattern(int n, std::vector<std::int64_t> flat) : n_(n), flat_(std::move(flat)) {
  if (n < 1 || flat_.size() != flat_size(n))
    throw ShapeError("pattern of rank " + std::to_string(n) + " needs " + std::to_string(flat_size(n)) +
                     " entries, got " + std::to_string(flat_.size()));
}

Pattern Pattern::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.size() % 2 == 0) throw ShapeError("pattern needs 2n-1 rows, got " + std::to_string(rows.size()));
  const int n = static_cast<int>(rows.size() + 1) / 2;
  std::vector<std::int64_t> flat;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    // rows alternate lam_k (length k) and lam'_{k-1} (length k-1)
    std::size_t want = static_cast<std::size_t>(n) - (r + 1) / 2;
    if (rows[r].size() != want)
      throw ShapeError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) + ", expected " +
                       std::to_string(want));
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return Pattern(n, std::move(flat));
}

std::vector<std::vector<std::int64_t>> Pattern::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  auto it = flat_.begin();
  for (int k = n_; k >= 1; --k) {
    out.emplace_back(it, it + k);
    it += k;
    if (k > 1) {
      out.emplace_back(it, it + (k - 1));
      it += k - 1;
    }
  }
  return out;
}

Pattern Pattern::shifted(const std::vector<Delta>& ds) const {
  Pattern q = *this;
  for (const auto& d : ds) {
    std::size_t off = d.primed ? prime_offset(n_, d.k) : lam_offset(n_, d.k);
    q.flat_[off + d.i - 1] += 2 * d.by;
  }
  return q;
}

Pattern Pattern::shifted(std::initializer_list<Delta> d) const { return shifted(std::vector<Delta>(d)); }

std::string Pattern::str() const {
  std::string s = "[";
  bool first_row = true;
  for (const auto& row : rows()) {
    s += first_row ? "" : " | ";
    first_row = false;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + HalfInt{row[i]}.str();
  }
  return s + "]";
}

bool validate(const Pattern& p) {
  const int n = p.n();
  const bool odd = p.flat()[0] % 2 != 0;
  for (auto v : p.flat())
    if ((v % 2 != 0) != odd) return false;
  for (int k = 2; k <= n; ++k) {
    // -|lam_k1| >= lam'_1 >= lam_k2 >= lam'_2 >= ... >= lam'_{k-1} >= lam_kk
    if (!(-abs(p.lam(k, 1)) >= p.prime(k - 1, 1))) return false;
    for (int i = 1; i < k; ++i) {
      if (!(p.prime(k - 1, i) >= p.lam(k, i + 1))) return false;
      if (i + 1 < k && !(p.lam(k, i + 1) >= p.prime(k - 1, i + 1))) return false;
    }
    // -|lam_{k-1,1}| >= lam'_1 >= lam_{k-1,2} >= ... >= lam_{k-1,k-1} >= lam'_{k-1}
    if (!(-abs(p.lam(k - 1, 1)) >= p.prime(k - 1, 1))) return false;
    for (int i = 1; i + 1 < k; ++i) {
      if (!(p.prime(k - 1, i) >= p.lam(k - 1, i + 1))) return false;
      if (!(p.lam(k - 1, i + 1) >= p.prime(k - 1, i + 1))) return false;
    }
  }
  return true;
}

std::vector<Pattern> enumerate(const HighestWeight& hw) {
  validate_highest_weight(hw);
  const int n = hw.n;
  std::vector<std::int64_t> flat(flat_size(n));
  std::copy(hw.twice.begin(), hw.twice.end(), flat.begin());
  std::vector<Pattern> out;

  std::function<void(int)> level;
  // fill lam_{k-1} given lam_k and lam'_{k-1}
  std::function<void(int, int)> lower = [&](int k, int i) {
    const std::size_t po = Pattern::prime_offset(n, k - 1), lo = Pattern::lam_offset(n, k - 1);
    if (i == k) return level(k - 1);
    std::int64_t lo_v = flat[po + i - 1];
    std::int64_t hi_v = (i == 1) ? -flat[po] : flat[po + i - 2];
    for (std::int64_t v = lo_v; v <= hi_v; v += 2) {
      flat[lo + i - 1] = v;
      lower(k, i + 1);
    }
  };
  std::function<void(int, int)> primed = [&](int k, int i) {
    const std::size_t to = Pattern::lam_offset(n, k), po = Pattern::prime_offset(n, k - 1);
    if (i == k) return lower(k, 1);
    std::int64_t lo_v = flat[to + i];
    std::int64_t hi_v = (i == 1) ? -std::abs(flat[to]) : flat[to + i - 1];
    for (std::int64_t v = lo_v; v <= hi_v; v += 2) {
      flat[po + i - 1] = v;
      primed(k, i + 1);
    }
  };
  level = [&](int k) {
    if (k == 1) {
      out.emplace_back(n, flat);
      return;
    }
    primed(k, 1);
  };
  level(n);
  std::sort(out.begin(), out.end());
  return out;
}

Pattern xi_pattern(const HighestWeight& hw) {
  const int n = hw.n;
  std::vector<std::int64_t> flat(flat_size(n));
  for (int k = n; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) flat[Pattern::lam_offset(n, k) + i - 1] = hw.twice[i - 1];
    if (k > 1)
      for (int i = 1; i < k; ++i) flat[Pattern::prime_offset(n, k - 1) + i - 1] = hw.twice[i];
  }
  return Pattern(n, std::move(flat));
}

HalfInt weight_k(const Pattern& p, int k) {
  if (k == 1) return p.lam(1, 1);
  // 2 sum_{i=1..k} lam'_{k-1,i-1} - sum lam_{k.} - sum lam_{k-1,.}
  std::int64_t t = 2 * p.prime0(k).twice;
  for (int i = 1; i < k; ++i) t += 2 * p.prime2(k - 1, i);
  for (int i = 1; i <= k; ++i) t -= p.lam2(k, i);
  for (int i = 1; i < k; ++i) t -= p.lam2(k - 1, i);
  return HalfInt{t};
}

std::vector<HalfInt> weight(const Pattern& p) {
  std::vector<HalfInt> w(p.n());
  for (int k = 1; k <= p.n(); ++k) w[k - 1] = weight_k(p, k);
  return w;
}

PatternBasis::PatternBasis(const HighestWeight& hw) : PatternBasis(hw, enumerate(hw)) {}

PatternBasis::PatternBasis(const HighestWeight& hw, std::vector<Pattern> patterns)
    : hw_(hw), pats_(std::move(patterns)) {
  weights_.reserve(pats_.size());
  for (const auto& p : pats_) weights_.push_back(weight(p));
}

std::optional<std::size_t> PatternBasis::find(const Pattern& p) const {
  auto it = std::lower_bound(pats_.begin(), pats_.end(), p);
  if (it == pats_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - pats_.begin());
}

std::size_t PatternBasis::index_of(const Pattern& p) const {
  if (auto i = find(p)) return *i;
  throw NotFound("pattern " + p.str() + " is not in the basis of " + hw_.str());
}

}  // namespace o2n
