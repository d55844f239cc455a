#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "o2n/rational.hpp"
#include "o2n/rational_function.hpp"

namespace o2n {

template <class T>
struct SparseEntry {
  std::uint32_t target;
  T value;
  bool operator==(const SparseEntry&) const = default;
};

// Column-compressed operator on the pattern basis: column s lists the
// images (target, coefficient) of basis vector s, targets ascending,
// no stored zeros.
template <class T>
class BasicSparse {
 public:
  using Entry = SparseEntry<T>;
  using Column = std::vector<Entry>;

  BasicSparse() = default;
  explicit BasicSparse(std::size_t dim) : cols_(dim) {}

  std::size_t dim() const { return cols_.size(); }
  const Column& column(std::size_t s) const { return cols_[s]; }
  const std::vector<Column>& columns() const { return cols_; }

  // Sorts, merges duplicates, drops zeros.
  void set_column(std::size_t s, Column col) {
    normalize(col);
    cols_[s] = std::move(col);
  }
  void assign_column(std::size_t s, const std::map<std::uint32_t, T>& acc) {
    Column col;
    for (const auto& [t, v] : acc)
      if (!is_zero(v)) col.push_back({t, v});
    cols_[s] = std::move(col);
  }

  T at(std::size_t t, std::size_t s) const {
    const auto& c = cols_[s];
    auto it = std::lower_bound(c.begin(), c.end(), t, [](const Entry& e, std::size_t x) { return e.target < x; });
    return (it != c.end() && it->target == t) ? it->value : T{};
  }

  std::size_t nnz() const {
    std::size_t k = 0;
    for (const auto& c : cols_) k += c.size();
    return k;
  }
  bool is_zero_operator() const { return nnz() == 0; }

  BasicSparse operator-() const {
    BasicSparse r = *this;
    for (auto& c : r.cols_)
      for (auto& e : c) e.value = -e.value;
    return r;
  }
  BasicSparse& operator+=(const BasicSparse& o) { return axpy(T(1), o); }
  BasicSparse& operator-=(const BasicSparse& o) { return axpy(T(-1), o); }
  // this += a * o
  BasicSparse& axpy(const T& a, const BasicSparse& o) {
    check_dim(o);
    for (std::size_t s = 0; s < cols_.size(); ++s) {
      if (o.cols_[s].empty()) continue;
      Column merged;
      const auto &x = cols_[s], &y = o.cols_[s];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].target < y[q].target)) {
          merged.push_back(x[p++]);
        } else if (p == x.size() || y[q].target < x[p].target) {
          T v = a * y[q].value;
          if (!is_zero(v)) merged.push_back({y[q].target, std::move(v)});
          ++q;
        } else {
          T v = x[p].value + a * y[q].value;
          if (!is_zero(v)) merged.push_back({x[p].target, std::move(v)});
          ++p, ++q;
        }
      }
      cols_[s] = std::move(merged);
    }
    return *this;
  }
  BasicSparse& operator*=(const T& a) {
    if (is_zero(a)) {
      for (auto& c : cols_) c.clear();
      return *this;
    }
    for (auto& c : cols_)
      for (auto& e : c) e.value *= a;
    return *this;
  }
  friend BasicSparse operator+(BasicSparse a, const BasicSparse& b) { return a += b; }
  friend BasicSparse operator-(BasicSparse a, const BasicSparse& b) { return a -= b; }
  friend BasicSparse operator*(BasicSparse a, const T& s) { return a *= s; }
  friend bool operator==(const BasicSparse& a, const BasicSparse& b) { return a.cols_ == b.cols_; }

  static void normalize(Column& col) {
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.target < b.target; });
    Column out;
    for (auto& e : col) {
      if (!out.empty() && out.back().target == e.target) out.back().value += e.value;
      else out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Entry& e) { return is_zero(e.value); }), out.end());
    col = std::move(out);
  }

 private:
  void check_dim(const BasicSparse& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("operator dimension mismatch");
  }
  std::vector<Column> cols_;
};

using SparseOperator = BasicSparse<Rational>;
using ParamOperator = BasicSparse<RationalFunction>;

SparseOperator diagonal(const std::vector<Rational>& d);

// Sparse vector as (index -> value).
using SparseVector = std::map<std::uint32_t, Rational>;
SparseVector apply_operator(const SparseOperator& a, const SparseVector& v);

}  // namespace o2n
