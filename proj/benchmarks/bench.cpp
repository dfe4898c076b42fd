#include <benchmark/benchmark.h>

#include "acurv/curvature.hpp"
#include "acurv/osserman.hpp"
#include "acurv/polynomial.hpp"
#include "acurv/schur.hpp"
#include "acurv/symgroup.hpp"
#include "acurv/tensor.hpp"
#include "acurv/young.hpp"

using namespace acurv;

namespace {

DenseTensor sample_curvature(int n) {
  Rng rng(7);
  const auto un = static_cast<std::size_t>(n);
  return gamma(random_symmetric(rng, un)) + Rational(1, 2) * alpha(random_skew(rng, un)) -
         gamma(random_symmetric(rng, un));
}

}  // namespace

static void BM_RingProductS4(benchmark::State& state) {
  const auto& c = canonical_elements();
  for (auto _ : state) benchmark::DoNotOptimize(ring_product(c.y_star, c.sigma_minus));
}
BENCHMARK(BM_RingProductS4);

static void BM_IdempotentSquare(benchmark::State& state) {
  const auto e = derivative_idempotent(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ring_product(e, e));
}
BENCHMARK(BM_IdempotentSquare)->DenseRange(0, 2);

static void BM_ApplyYStar(benchmark::State& state) {
  const DenseTensor t = sample_curvature(static_cast<int>(state.range(0)));
  const auto& y = canonical_elements().y_star;
  for (auto _ : state) benchmark::DoNotOptimize(apply_symmetry_operator(y, t));
}
BENCHMARK(BM_ApplyYStar)->DenseRange(2, 4);

static void BM_DecomposeMixed(benchmark::State& state) {
  const DenseTensor t = sample_curvature(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_mixed(t));
}
BENCHMARK(BM_DecomposeMixed)->DenseRange(2, 4);

static void BM_DecomposePureGamma(benchmark::State& state) {
  const DenseTensor t = sample_curvature(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_pure(t, DecompositionKind::pure_gamma));
}
BENCHMARK(BM_DecomposePureGamma)->DenseRange(2, 4);

static void BM_CharPoly(benchmark::State& state) {
  Rng rng(11);
  const Matrix m = random_symmetric(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 16);

static void BM_LrProduct(benchmark::State& state) {
  const Partition l{3, 2, 1}, m{2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(lr_product(l, m));
}
BENCHMARK(BM_LrProduct);
BENCHMARK_MAIN();
