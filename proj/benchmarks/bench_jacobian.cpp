#include <benchmark/benchmark.h>

#include "hodgekit/hodge.hpp"

namespace {

using namespace hodgekit;

Polynomial running_example() {
  const WeightedRing ring({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  return parse_polynomial("z^2 - x0^10 - x1^10 - y^5", ring);
}

void bm_graded_dim_middle(benchmark::State& state) {
  const JacobianContext ctx(running_example());
  for (auto _ : state) benchmark::DoNotOptimize(graded_quotient_dim(ctx, 11));
}
BENCHMARK(bm_graded_dim_middle);

void bm_graded_dim_top(benchmark::State& state) {
  const JacobianContext ctx(running_example());
  for (auto _ : state) benchmark::DoNotOptimize(graded_quotient_dim(ctx, 21));
}
BENCHMARK(bm_graded_dim_top);

void bm_quasi_smooth_window(benchmark::State& state) {
  const JacobianContext ctx(running_example());
  for (auto _ : state) benchmark::DoNotOptimize(quasi_smooth(ctx));
}
BENCHMARK(bm_quasi_smooth_window);

void bm_hodge_numbers(benchmark::State& state) {
  const Polynomial g = running_example();
  for (auto _ : state) benchmark::DoNotOptimize(hodge_numbers_primitive(g));
}
BENCHMARK(bm_hodge_numbers);

void bm_eigen_decomposition(benchmark::State& state) {
  const Polynomial g = running_example();
  const DiagonalAction action({2, 2}, {{1, 0, 0, 0}, {0, 1, 0, 0}}, g);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_hodge_numbers(g, action));
}
BENCHMARK(bm_eigen_decomposition);

void bm_hilbert_series(benchmark::State& state) {
  const WeightedRing ring({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  for (auto _ : state)
    benchmark::DoNotOptimize(hilbert_series_closed_form(ring, {9, 9, 8, 5}, 27));
}
BENCHMARK(bm_hilbert_series);

}  // namespace

BENCHMARK_MAIN();
