#include <benchmark/benchmark.h>

#include <complex>

#include "symcub/bernstein_szego.hpp"
#include "symcub/schur_cubature.hpp"
#include "symcub/verify.hpp"

using namespace symcub;
using cd = std::complex<double>;

namespace {

BSParams mixed_poles() { return BSParams(1, 0, {cd(0.3, 0.4), cd(0.3, -0.4), cd(-0.5, 0)}); }

void BM_BSRoots(benchmark::State& state) {
  const auto p = mixed_poles();
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs_roots(p, degree));
}
BENCHMARK(BM_BSRoots)->Arg(4)->Arg(16)->Arg(64);

void BM_BuildRuleJacobi(benchmark::State& state) {
  const auto f = OrthoFamily::jacobi(0.5, 0.5);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rule(f, m, 3));
}
BENCHMARK(BM_BuildRuleJacobi)->Arg(2)->Arg(6)->Arg(10);

void BM_BuildRuleBS(benchmark::State& state) {
  const auto f = OrthoFamily::bernstein_szego(mixed_poles());
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rule(f, m, 3));
}
BENCHMARK(BM_BuildRuleBS)->Arg(2)->Arg(6)->Arg(10);

void BM_OracleMonomials(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const EnsembleOracle oracle(OrthoFamily::hermite(), n, {.points_per_axis = 100});
  const auto labels = enumerate_alcove(5, n);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.integrate_monomials(labels));
}
BENCHMARK(BM_OracleMonomials)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
