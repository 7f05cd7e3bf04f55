#include <benchmark/benchmark.h>

#include "hamcode/certify.hpp"
#include "hamcode/code.hpp"
#include "hamcode/constructions.hpp"
#include "hamcode/groups.hpp"
#include "hamcode/spectra.hpp"

namespace {

void BM_distance_partition(benchmark::State& state) {
  const hamcode::Code e = hamcode::even_subcode_ph12();
  for (auto _ : state) {
    hamcode::DistancePartition dp(e);
    benchmark::DoNotOptimize(dp.covering_radius());
  }
}
BENCHMARK(BM_distance_partition);

void BM_chain_order(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const hamcode::GroupGens g = hamcode::repetition_transitive_group(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamcode::group_order(g, hamcode::ActionDomain::Vertices));
  }
}
BENCHMARK(BM_chain_order)->Arg(6)->Arg(8)->Arg(10);

void BM_autgroup_discovery(benchmark::State& state) {
  const hamcode::Code e = hamcode::even_subcode_ph12();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamcode::binary_code_autgroup(e));
  }
}
BENCHMARK(BM_autgroup_discovery);

void BM_krawtchouk_table(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hamcode::BigInt acc = 0;
    for (int k = 0; k <= m; ++k) {
      for (int x = 0; x <= m; ++x) acc += hamcode::krawtchouk(m, 4, k, x);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_krawtchouk_table)->Arg(12)->Arg(24);

void BM_macwilliams(benchmark::State& state) {
  const hamcode::DistanceDistribution d =
      hamcode::distance_distribution(hamcode::punctured_hadamard_12());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamcode::macwilliams_transform(d));
  }
}
BENCHMARK(BM_macwilliams);

void BM_certify_s2(benchmark::State& state) {
  const hamcode::Code e = hamcode::even_subcode_ph12();
  const hamcode::GroupGens aut = hamcode::binary_code_autgroup(e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamcode::neighbour_transitive(e, aut, 2));
  }
}
BENCHMARK(BM_certify_s2);

}  // namespace

BENCHMARK_MAIN();
