// Serial reference vs OpenMP kernels on a mid-sized o(6) representation.
// Arg(0) is the serial path; Arg(t) uses t threads.

#include <benchmark/benchmark.h>

#include "o2n/kernels.hpp"
#include "o2n/operators.hpp"
#include "o2n/representation.hpp"
#include "o2n/verify.hpp"

namespace {

const o2n::HighestWeight& bench_weight() {
  static const o2n::HighestWeight hw{3, {-2, -2, -4}};  // (-1,-1,-2), dim 45
  return hw;
}

const o2n::Representation& bench_rep() {
  static const o2n::Representation rep = o2n::build_representation(bench_weight());
  return rep;
}

int jobs_of(const benchmark::State& st) { return st.range(0) == 0 ? 1 : static_cast<int>(st.range(0)); }

void BM_PhiParam(benchmark::State& st) {
  const auto& basis = bench_rep().basis();
  for (auto _ : st) benchmark::DoNotOptimize(o2n::matrix_Phi_param(basis, 3, jobs_of(st)));
}

void BM_RegularizedCommutator(benchmark::State& st) {
  const auto& basis = bench_rep().basis();
  for (auto _ : st) benchmark::DoNotOptimize(o2n::regularized_commutator(basis, 3, jobs_of(st)));
}

void BM_Multiply(benchmark::State& st) {
  const auto& rep = bench_rep();
  const auto a = rep.gen({2, 3}), b = rep.gen({3, 2});
  for (auto _ : st) {
    auto c = st.range(0) == 0 ? o2n::kernels::multiply_serial(a, b) : o2n::kernels::multiply_parallel(a, b, jobs_of(st));
    benchmark::DoNotOptimize(c);
  }
}

void BM_CheckBrackets(benchmark::State& st) {
  const auto& rep = bench_rep();
  for (auto _ : st) benchmark::DoNotOptimize(o2n::check_brackets(rep, jobs_of(st)));
}

void BM_Build(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(o2n::build_representation(bench_weight(), {jobs_of(st)}));
}

}  // namespace

BENCHMARK(BM_PhiParam)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularizedCommutator)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multiply)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CheckBrackets)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Build)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
