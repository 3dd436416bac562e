#include <benchmark/benchmark.h>

#include <random>

#include "spinlab/catalog.hpp"
#include "spinlab/homogeneous.hpp"
#include "spinlab/kernels.hpp"
#include "spinlab/serial_reference.hpp"

using namespace spinlab;

namespace {

std::vector<Form> random_three_forms(int n, int count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> idx(1, n);
  std::uniform_real_distribution<double> coef(-1, 1);
  std::vector<Form> out;
  while (static_cast<int>(out.size()) < count) {
    Form f(n);
    for (int t = 0; t < 6; ++t) {
      int a = idx(rng), b = idx(rng), c = idx(rng);
      if (a == b || b == c || a == c) continue;
      f += Form::monomial(n, {a, b, c}) * coef(rng);
    }
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

template <bool Parallel>
void square_identity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CliffordRep rep(n);
  const auto forms = random_three_forms(n, 64);
  for (auto _ : state) {
    auto r = Parallel ? kernels::square_identity_residuals(rep, forms) : serial::square_identity_residuals(rep, forms);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(forms.size()));
}

template <bool Parallel>
void curvature_and_bianchi(benchmark::State& state) {
  const auto space = stiefel_space(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? kernels::canonical_curvature(space.brackets(), space.dim_h())
                      : serial::canonical_curvature(space.brackets(), space.dim_h());
    auto b = Parallel ? kernels::bianchi_cyclic(r) : serial::bianchi_cyclic(r);
    benchmark::DoNotOptimize(b);
  }
}

}  // namespace

BENCHMARK(square_identity<false>)->DenseRange(5, 9, 2)->Name("serial/square_identity");
BENCHMARK(square_identity<true>)->DenseRange(5, 9, 2)->Name("omp/square_identity");
BENCHMARK(curvature_and_bianchi<false>)->DenseRange(4, 8, 2)->Name("serial/curvature_bianchi");
BENCHMARK(curvature_and_bianchi<true>)->DenseRange(4, 8, 2)->Name("omp/curvature_bianchi");

BENCHMARK_MAIN();
