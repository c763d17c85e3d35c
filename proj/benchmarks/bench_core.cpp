#include <benchmark/benchmark.h>

#include "nahm/catalog.hpp"
#include "nahm/derivations.hpp"
#include "nahm/flow.hpp"
#include "nahm/structure.hpp"

using namespace nahm;

static void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat((i * 7 + j * 3) % 11 - 5, 1 + (i + j) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(9)->Arg(18)->Arg(36);

static void BM_KillingForm(benchmark::State& state) {
  const LieAlgebra g = catalog("sl2+aff1");
  for (auto _ : state) benchmark::DoNotOptimize(g.killing());
}
BENCHMARK(BM_KillingForm);

static void BM_NahmProduct(benchmark::State& state) {
  const NahmAlgebra a{catalog("so3+so3")};
  NahmElement x = a.basis_element(0), y = a.basis_element(7);
  for (auto _ : state) benchmark::DoNotOptimize(a.product(x, y));
}
BENCHMARK(BM_NahmProduct);

static void BM_DerivationAlgebra(benchmark::State& state) {
  const NahmAlgebra a{catalog("so3")};
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(a));
}
BENCHMARK(BM_DerivationAlgebra);

static void BM_SchurCentralizer(benchmark::State& state) {
  const NahmAlgebra a{catalog("so3")};
  for (auto _ : state) benchmark::DoNotOptimize(schur_centralizer(a));
}
BENCHMARK(BM_SchurCentralizer);

static void BM_IntegrateBlowUp(benchmark::State& state) {
  const NahmAlgebra a{catalog("so3")};
  const LieAlgebra& g = a.base();
  const NahmElement e{g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)};
  FlowOptions opts;
  opts.t_end = 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(integrate(a, e, opts));
}
BENCHMARK(BM_IntegrateBlowUp);

BENCHMARK_MAIN();
