#include <benchmark/benchmark.h>

#include "hermfock/quadrature.hpp"
#include "hermfock/spaces.hpp"
#include "hermfock/transforms.hpp"

using namespace hermfock;

static void BM_GaussHermite(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite(order));
}
BENCHMARK(BM_GaussHermite)->Arg(32)->Arg(128)->Arg(512);

static void BM_PsiMnSeq(benchmark::State& state) {
  const SParam sp(0.5);
  const int n = static_cast<int>(state.range(0));
  const cplx z(0.7, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(psi_mn_seq(64, n, z, sp));
}
BENCHMARK(BM_PsiMnSeq)->Arg(0)->Arg(2)->Arg(4);

static void BM_PsiGram(benchmark::State& state) {
  const SParam sp(0.5);
  const auto rule = make_rule_2d(static_cast<int>(state.range(0)));
  QuadExponent ex;
  ex.zz = -0.5;
  std::vector<ComplexEnvelopedFn> fam;
  for (int m = 0; m <= 12; ++m) fam.push_back({[m, sp](cplx z) { return psi_poly_seq(m, z, sp)[m]; }, ex});
  for (auto _ : state) benchmark::DoNotOptimize(gram_Hs(fam, sp, rule));
}
BENCHMARK(BM_PsiGram)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

static void BM_ApplyBs(benchmark::State& state) {
  const SParam sp(0.5);
  const auto& rule = gauss_hermite_cached(128);
  const auto f = f_enveloped(5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_Bs(f, cplx(1.0, 0.5), sp, rule));
}
BENCHMARK(BM_ApplyBs);
BENCHMARK_MAIN();
