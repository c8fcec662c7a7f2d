#include <benchmark/benchmark.h>

#include "tcla/criterion.hpp"
#include "tcla/shapovalov.hpp"

namespace {

using namespace tcla;

WeightFunctional sample_weight(const TruncatedAlgebra& alg) {
  WeightFunctional lambda = WeightFunctional::zero(alg);
  int k = 1;
  for (int i = 0; i <= alg.nilp(); ++i)
    for (auto& x : lambda.level(i)) x = ratio(k++, 3);
  return lambda;
}

void BM_Sl2Determinant(benchmark::State& state) {
  const TruncatedAlgebra alg(make_algebra("sl2"), 2);
  const auto lambda = sample_weight(alg);
  const RootVector chi{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(shap_det(lambda, chi, alg));
}
BENCHMARK(BM_Sl2Determinant)->DenseRange(1, 4);

void BM_Sl3Scan(benchmark::State& state) {
  const TruncatedAlgebra alg(make_algebra("sl3"), static_cast<int>(state.range(0)));
  const auto lambda = sample_weight(alg);
  for (auto _ : state) benchmark::DoNotOptimize(scan_reducible(lambda, alg, 2));
}
BENCHMARK(BM_Sl3Scan)->Arg(1)->Arg(2);

void BM_VirasoroScan(benchmark::State& state) {
  const TruncatedAlgebra alg(make_algebra("virasoro"), 1);
  const auto lambda = sample_weight(alg);
  for (auto _ : state) benchmark::DoNotOptimize(scan_reducible(lambda, alg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VirasoroScan)->DenseRange(2, 4);

void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ratio(static_cast<long>((i * 7 + j * 3) % 11) - 5, static_cast<long>(1 + (i + j) % 4));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
