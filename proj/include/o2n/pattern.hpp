#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "o2n/half_int.hpp"
#include "o2n/highest_weight.hpp"

namespace o2n {

// D-type array, flattened in row order
//   lam_n, lam'_{n-1}, lam_{n-1}, ..., lam'_1, lam_1
// with doubled entries. Lexicographic order on that tuple is the basis order.
class Pattern {
 public:
  Pattern() = default;
  Pattern(int n, std::vector<std::int64_t> flat);
  // rows in the flattened order; throws ShapeError on wrong row lengths
  static Pattern from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int n() const { return n_; }
  const std::vector<std::int64_t>& flat() const { return flat_; }
  std::vector<std::vector<std::int64_t>> rows() const;

  // doubled entries, 1-based (k, i)
  std::int64_t lam2(int k, int i) const { return flat_[lam_offset(n_, k) + i - 1]; }
  std::int64_t prime2(int k, int i) const { return flat_[prime_offset(n_, k) + i - 1]; }
  HalfInt lam(int k, int i) const { return HalfInt{lam2(k, i)}; }
  HalfInt prime(int k, int i) const { return HalfInt{prime2(k, i)}; }
  // l_{ki} = lam_{ki} - i + 1, l'_{ki} likewise
  HalfInt l(int k, int i) const { return HalfInt{lam2(k, i) - 2 * (i - 1)}; }
  HalfInt lp(int k, int i) const { return HalfInt{prime2(k, i) - 2 * (i - 1)}; }
  // lam'_{k-1,0} = max(lam_{k1}, lam_{k-1,1})
  HalfInt prime0(int k) const { return std::max(lam(k, 1), lam(k - 1, 1)); }

  struct Delta {
    bool primed;
    int k, i;
    int by;  // in units of 1, i.e. the doubled entry moves by 2*by
  };
  Pattern shifted(std::initializer_list<Delta> d) const;
  Pattern shifted(const std::vector<Delta>& d) const;

  std::string str() const;
  auto operator<=>(const Pattern& o) const { return flat_ <=> o.flat_; }
  bool operator==(const Pattern& o) const { return flat_ == o.flat_; }

  static std::size_t lam_offset(int n, int k);
  static std::size_t prime_offset(int n, int k);

 private:
  int n_ = 0;
  std::vector<std::int64_t> flat_;
};

// Parity + interlacing. Row lengths are checked by construction.
bool validate(const Pattern& p);

// All patterns with top row hw, ascending.
std::vector<Pattern> enumerate(const HighestWeight& hw);

// The pattern of the highest vector: lam_{k-1,i} = lam_{ki}, lam'_{k-1,i} = lam_{k,i+1}.
Pattern xi_pattern(const HighestWeight& hw);

// F_kk eigenvalues, k = 1..n (component k-1).
std::vector<HalfInt> weight(const Pattern& p);
HalfInt weight_k(const Pattern& p, int k);

class PatternBasis {
 public:
  explicit PatternBasis(const HighestWeight& hw);
  PatternBasis(const HighestWeight& hw, std::vector<Pattern> patterns);  // must be sorted/unique

  const HighestWeight& highest_weight() const { return hw_; }
  int n() const { return hw_.n; }
  std::size_t size() const { return pats_.size(); }
  const Pattern& operator[](std::size_t i) const { return pats_[i]; }
  const std::vector<Pattern>& patterns() const { return pats_; }

  std::optional<std::size_t> find(const Pattern& p) const;
  std::size_t index_of(const Pattern& p) const;  // NotFound
  // cached F_kk eigenvalues of pattern i
  const std::vector<HalfInt>& weight_of(std::size_t i) const { return weights_[i]; }

 private:
  HighestWeight hw_;
  std::vector<Pattern> pats_;
  std::vector<std::vector<HalfInt>> weights_;
};

}  // namespace o2n
