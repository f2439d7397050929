#include <benchmark/benchmark.h>

#include "abcgg/certificate.hpp"
#include "abcgg/closed_form.hpp"
#include "abcgg/enumerate.hpp"
#include "abcgg/families.hpp"
#include "abcgg/index.hpp"

using namespace abcgg;

static void BM_AbcGg(benchmark::State& state) {
  auto g = b1(3, int(state.range(0)) - 2);
  for (auto _ : state) benchmark::DoNotOptimize(abc_gg_value(g));
}
BENCHMARK(BM_AbcGg)->Arg(10)->Arg(20)->Arg(41);

static void BM_Certificate(benchmark::State& state) {
  auto g = b2(4, 2, int(state.range(0)) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g));
}
BENCHMARK(BM_Certificate)->Arg(10)->Arg(12)->Arg(16);

static void BM_CertificateTwinHeavy(benchmark::State& state) {
  auto g = h_graph(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g));
}
BENCHMARK(BM_CertificateTwinHeavy)->Arg(12)->Arg(16);

static void BM_EnumerateBicyclic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_bicyclic(int(state.range(0))));
}
BENCHMARK(BM_EnumerateBicyclic)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_BruteForceBicyclic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_bicyclic(int(state.range(0))));
}
BENCHMARK(BM_BruteForceBicyclic)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_RootedTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rooted_trees(int(state.range(0))));
}
BENCHMARK(BM_RootedTrees)->Arg(8)->Arg(12);

static void BM_ClosedForms(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_oddodd(101, 48));
    benchmark::DoNotOptimize(f_eveneven(101, 48));
    benchmark::DoNotOptimize(f_oddeven(202, 48));
  }
}
BENCHMARK(BM_ClosedForms);

BENCHMARK_MAIN();
