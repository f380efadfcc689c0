#include <benchmark/benchmark.h>

#include "degree_forge/canonical.hpp"
#include "degree_forge/constructions.hpp"
#include "degree_forge/enumerate.hpp"
#include "degree_forge/search.hpp"

namespace {

using namespace degree_forge;

void BM_EnumerateMaximal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  const MaximalFamilyEnumerator e(n, k, t);
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = 0;
    e.run_all([&](FamilyView) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["families"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateMaximal)->Args({7, 3, 1})->Args({8, 3, 1})->Args({9, 3, 1})->Args({7, 4, 2})
    ->Unit(benchmark::kMillisecond);

void BM_MaxDegreeProfile(benchmark::State& state) {
  SearchOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_degree_profile(9, 3, 1, o));
}
BENCHMARK(BM_MaxDegreeProfile)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = build({ConstructionKind::h_ell, n, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(f));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(7, 12, 1);

void BM_CanonicalFormAllMaximal(benchmark::State& state) {
  const auto fams = enumerate_maximal(8, 3, 1);
  for (auto _ : state) {
    for (const auto& f : fams) benchmark::DoNotOptimize(canonical_form(f));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * fams.size()));
}
BENCHMARK(BM_CanonicalFormAllMaximal)->Unit(benchmark::kMillisecond);

}  // namespace
