#include <benchmark/benchmark.h>

#include "qgrass/gkm.hpp"
#include "qgrass/noncrossing.hpp"
#include "qgrass/pluecker.hpp"
#include "qgrass/presentations.hpp"
#include "qgrass/qsym.hpp"

namespace {

void BM_EnumerateNc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto all = qgr::enumerate_nc(n);
    benchmark::DoNotOptimize(all);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateNc)->DenseRange(6, 10, 2)->Complexity();

void BM_QuasiJohnson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = qgr::quasi_johnson(n / 2, n);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_QuasiJohnson)->DenseRange(4, 8, 2);

void BM_QuasiJohnsonClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = qgr::quasi_johnson_from_inversions(n / 2, n);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_QuasiJohnsonClosedForm)->DenseRange(4, 10, 2);

void BM_Fundamental(benchmark::State& state) {
  const qgr::Composition alpha({3, 2, 3});
  for (auto _ : state) {
    auto f = qgr::fundamental(alpha, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Fundamental)->DenseRange(3, 6);

void BM_SchurFExpansion(benchmark::State& state) {
  const qgr::Partition mu({3, 2, 1});
  const auto s = qgr::schur(mu, 3);
  for (auto _ : state) {
    auto e = qgr::f_expansion(s, 3);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_SchurFExpansion);

void BM_QuotientBetti(benchmark::State& state) {
  for (auto _ : state) {
    auto ranks = qgr::qsym_quotient_betti(2, 5, 7);
    benchmark::DoNotOptimize(ranks);
  }
}
BENCHMARK(BM_QuotientBetti);

void BM_FlowupSolve(benchmark::State& state) {
  const auto qj = qgr::quasi_johnson_from_inversions(2, 5);
  const qgr::RSubset a(5, {1, 4});
  for (auto _ : state) {
    auto sol = qgr::flowup_solve(qj, a);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_FlowupSolve);

void BM_VerifyVanishing(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = qgr::verify_vanishing(2, 5, 10, 99);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyVanishing);

} // namespace

BENCHMARK_MAIN();
