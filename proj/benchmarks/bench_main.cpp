#include <benchmark/benchmark.h>

#include "qorder/qorder.hpp"

using namespace qorder;

static void BM_InnerGroupDihedral(benchmark::State& state) {
  const auto q = dihedral_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inner_group(q).order());
}
BENCHMARK(BM_InnerGroupDihedral)->Arg(5)->Arg(17)->Arg(63);

static void BM_InnerGroupConjS4(benchmark::State& state) {
  const auto q = conj_quandle(symmetric_group(4));
  for (auto _ : state) benchmark::DoNotOptimize(inner_group(q).order());
}
BENCHMARK(BM_InnerGroupConjS4);

static void BM_EnumerateRcoTrivial(benchmark::State& state) {
  const auto q = trivial_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rco(q).size());
}
BENCHMARK(BM_EnumerateRcoTrivial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_GenerateQuandles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_all_quandles(n, true).size());
}
BENCHMARK(BM_GenerateQuandles)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DecideRightCircular(benchmark::State& state) {
  const auto q = affine_quandle(7, 3);
  DecideOptions opts;
  opts.tier = state.range(0) == 0 ? Tier::Fast : Tier::Oracle;
  for (auto _ : state) benchmark::DoNotOptimize(decide_right_circular(q, opts).answer);
  state.SetLabel(to_string(opts.tier));
}
BENCHMARK(BM_DecideRightCircular)->Arg(0)->Arg(1);

static void BM_ValidateTripleFunction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = cyclic_to_function(CyclicOrder::identity(n));
  for (auto _ : state) benchmark::DoNotOptimize(validate_triple_function(f).has_value());
}
BENCHMARK(BM_ValidateTripleFunction)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK_MAIN();
