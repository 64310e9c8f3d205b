#include <benchmark/benchmark.h>

#include <cmath>

#include "tmra/best_approx.hpp"
#include "tmra/quad_oracle.hpp"
#include "tmra/tm_basis.hpp"

namespace {

using namespace tmra;

PoleSequence tilted(int n) {
  std::vector<Pole> v;
  for (int k = 1; k <= n; ++k) v.push_back({1.5 * std::sin(1.3 * k), 0.4 + 0.35 * k});
  return PoleSequence(std::move(v));
}

const KernelParams kParams{2.0, -3.0, 1.0};

void BM_BestPolynomial(benchmark::State& state) {
  const PoleSequence seq = tilted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(best_polynomial(kParams, seq));
}
BENCHMARK(BM_BestPolynomial)->RangeMultiplier(2)->Range(1, 64);

void BM_MinErrorClosedForm(benchmark::State& state) {
  const PoleSequence seq = tilted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_error_closed_form(kParams, seq));
}
BENCHMARK(BM_MinErrorClosedForm)->RangeMultiplier(2)->Range(1, 64);

void BM_ExpandInBasis(benchmark::State& state) {
  const PoleSequence seq = tilted(static_cast<int>(state.range(0)));
  const ComplexPolynomial T = best_polynomial(kParams, seq);
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_tm_basis(T, seq));
}
BENCHMARK(BM_ExpandInBasis)->RangeMultiplier(2)->Range(1, 16);

void BM_PhiAll(benchmark::State& state) {
  const BasisContext ctx(tilted(static_cast<int>(state.range(0))));
  const cplx z{0.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(ctx.phi_all(ctx.size(), z));
}
BENCHMARK(BM_PhiAll)->RangeMultiplier(4)->Range(1, 256);

void BM_OracleError(benchmark::State& state) {
  const PoleSequence seq = tilted(static_cast<int>(state.range(0)));
  const ComplexPolynomial T = best_polynomial(kParams, seq);
  weighted_error_functional(T, kParams, seq, {});  // node tables
  for (auto _ : state) benchmark::DoNotOptimize(weighted_error_functional(T, kParams, seq, {}));
}
BENCHMARK(BM_OracleError)->RangeMultiplier(2)->Range(1, 16)->Unit(benchmark::kMicrosecond);

void BM_GramMatrix(benchmark::State& state) {
  const BasisContext ctx(tilted(static_cast<int>(state.range(0))));
  gram_matrix(ctx, ctx.size(), {});
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(ctx, ctx.size(), {}));
}
BENCHMARK(BM_GramMatrix)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
