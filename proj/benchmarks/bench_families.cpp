#include <benchmark/benchmark.h>

#include <random>

#include "degree_forge/constructions.hpp"
#include "degree_forge/shadows.hpp"
#include "degree_forge/transforms.hpp"
#include "degree_forge/transversal.hpp"

namespace {

using namespace degree_forge;

// Random subfamily of all k-sets with inclusion probability 1/2, fixed seed.
UniformFamily random_family(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> sets;
  for (VertexSet s : all_k_sets(n, k)) {
    if (rng() & 1u) sets.push_back(s);
  }
  return UniformFamily::from_sets(n, k, sets);
}

void BM_MakeShifted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = random_family(n, 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(make_shifted(f));
  state.counters["sets"] = static_cast<double>(f.size());
}
BENCHMARK(BM_MakeShifted)->Arg(8)->Arg(10)->Arg(12);

void BM_TransversalReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = build({ConstructionKind::h_ell, n, 4, 3});
  for (auto _ : state) benchmark::DoNotOptimize(transversal_report(f, 1));
}
BENCHMARK(BM_TransversalReport)->Arg(8)->Arg(10)->Arg(12);

void BM_Shadow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = random_family(n, 5, 13);
  for (auto _ : state) benchmark::DoNotOptimize(shadow(f, 2));
  state.counters["sets"] = static_cast<double>(f.size());
}
BENCHMARK(BM_Shadow)->Arg(10)->Arg(12)->Arg(14);

void BM_KkMinShadow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kk_min_shadow(14, 5, 1000, 2));
}
BENCHMARK(BM_KkMinShadow);

void BM_SaturateLexGreedy(benchmark::State& state) {
  const auto seed = UniformFamily::from_sets(10, 4, {VertexSet::of({1, 2, 3, 4}), VertexSet::of({1, 5, 6, 7})});
  for (auto _ : state) benchmark::DoNotOptimize(saturate(seed, 1, SaturationMode::lex_greedy));
}
BENCHMARK(BM_SaturateLexGreedy);

}  // namespace
