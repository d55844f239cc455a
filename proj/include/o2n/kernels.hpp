#pragma once

// Data-parallel kernels. Each has a serial reference (used when jobs <= 1
// and kept for equivalence tests) and an OpenMP variant; both must give
// identical results, element for element.

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

#include "o2n/sparse.hpp"

namespace o2n::kernels {

template <class T, class F>
std::vector<T> map_serial(std::size_t count, F&& fn) {
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

// Results land in slot i regardless of scheduling. If iterations throw,
// the exception of the lowest index is rethrown, as the serial loop would.
template <class T, class F>
std::vector<T> map_parallel(std::size_t count, int jobs, F&& fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> err(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class T, class F>
std::vector<T> map_columns(std::size_t count, int jobs, F&& fn) {
  if (jobs <= 1) return map_serial<T>(count, fn);
  return map_parallel<T>(count, jobs, fn);
}

// Column s of a*b.
template <class T>
typename BasicSparse<T>::Column product_column(const BasicSparse<T>& a, const BasicSparse<T>& b, std::size_t s) {
  typename BasicSparse<T>::Column col;
  for (const auto& eb : b.column(s))
    for (const auto& ea : a.column(eb.target)) col.push_back({ea.target, ea.value * eb.value});
  BasicSparse<T>::normalize(col);
  return col;
}

template <class T>
BasicSparse<T> assemble(std::vector<typename BasicSparse<T>::Column> cols) {
  BasicSparse<T> r(cols.size());
  for (std::size_t s = 0; s < cols.size(); ++s) r.set_column(s, std::move(cols[s]));
  return r;
}

template <class T>
BasicSparse<T> multiply_serial(const BasicSparse<T>& a, const BasicSparse<T>& b) {
  using Col = typename BasicSparse<T>::Column;
  return assemble<T>(map_serial<Col>(b.dim(), [&](std::size_t s) { return product_column(a, b, s); }));
}

template <class T>
BasicSparse<T> multiply_parallel(const BasicSparse<T>& a, const BasicSparse<T>& b, int jobs) {
  using Col = typename BasicSparse<T>::Column;
  return assemble<T>(map_parallel<Col>(b.dim(), jobs, [&](std::size_t s) { return product_column(a, b, s); }));
}

template <class T>
BasicSparse<T> multiply(const BasicSparse<T>& a, const BasicSparse<T>& b, int jobs = 1) {
  return jobs <= 1 ? multiply_serial(a, b) : multiply_parallel(a, b, jobs);
}

template <class T>
BasicSparse<T> commutator(const BasicSparse<T>& a, const BasicSparse<T>& b, int jobs = 1) {
  return multiply(a, b, jobs) - multiply(b, a, jobs);
}

}  // namespace o2n::kernels
