#include <benchmark/benchmark.h>

#include "graphperiod/criteria.hpp"
#include "graphperiod/invariants.hpp"
#include "graphperiod/named_graphs.hpp"

using namespace graphperiod;

static void BM_CanonicalKey(benchmark::State& state, const char* spec) {
  const auto g = named_graph_from_spec(spec);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK_CAPTURE(BM_CanonicalKey, petersen, "petersen");
BENCHMARK_CAPTURE(BM_CanonicalKey, frucht, "frucht");
BENCHMARK_CAPTURE(BM_CanonicalKey, complete12, "complete:12");

static void BM_Tutte(benchmark::State& state, const char* spec) {
  const auto g = named_graph_from_spec(spec);
  for (auto _ : state) benchmark::DoNotOptimize(tutte_deletion_contraction(g));
}
BENCHMARK_CAPTURE(BM_Tutte, petersen, "petersen")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Tutte, frucht, "frucht")->Unit(benchmark::kMillisecond);

static void BM_NegamiExpansion(benchmark::State& state) {
  const auto g = named_graph("petersen");
  for (auto _ : state) benchmark::DoNotOptimize(negami_subset_expansion(g));
}
BENCHMARK(BM_NegamiExpansion)->Unit(benchmark::kMillisecond);

static void BM_Chromatic(benchmark::State& state) {
  const auto g = named_graph("frucht");
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_deletion_contraction(g));
}
BENCHMARK(BM_Chromatic)->Unit(benchmark::kMillisecond);

static void BM_FindFreePeriod(benchmark::State& state, const char* spec, std::uint32_t p) {
  const auto g = named_graph_from_spec(spec);
  for (auto _ : state) benchmark::DoNotOptimize(find_free_period(g, p));
}
BENCHMARK_CAPTURE(BM_FindFreePeriod, petersen_5, "petersen", 5);
BENCHMARK_CAPTURE(BM_FindFreePeriod, frucht_3, "frucht", 3);

static void BM_Exclusion(benchmark::State& state) {
  const auto g = named_graph("frucht");
  for (auto _ : state) benchmark::DoNotOptimize(exclusion_report(g, {2, 3, 5, 7}));
}
BENCHMARK(BM_Exclusion)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
