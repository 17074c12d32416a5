#include <benchmark/benchmark.h>

#include "hodgekit/scenarios.hpp"

namespace {

using namespace hodgekit;

void bm_snf_k3(benchmark::State& state) {
  const IntMat gram = lattice_K3().gram;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(gram));
}
BENCHMARK(bm_snf_k3);

void bm_signature_k3(benchmark::State& state) {
  const IntMat gram = lattice_K3().gram;
  for (auto _ : state) benchmark::DoNotOptimize(signature_of(gram));
}
BENCHMARK(bm_signature_k3);

void bm_discriminant_form_m(benchmark::State& state) {
  const Lattice m = degree5_pair_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_form(m));
}
BENCHMARK(bm_discriminant_form_m);

void bm_same_genus_m(benchmark::State& state) {
  const Lattice m = degree5_pair_lattice();
  const Lattice model = direct_sum({lattice_U(2), lattice_D(4)});
  for (auto _ : state) benchmark::DoNotOptimize(same_genus(m, model));
}
BENCHMARK(bm_same_genus_m);

void bm_k3_orthogonal_split(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k3_orthogonal_split());
}
BENCHMARK(bm_k3_orthogonal_split);

}  // namespace

BENCHMARK_MAIN();
