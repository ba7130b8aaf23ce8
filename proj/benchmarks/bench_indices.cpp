#include <benchmark/benchmark.h>

#include <random>

#include "zagreb/closed_forms.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/profile.hpp"

using namespace zagreb;

namespace {

Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int v = 1; v < n; ++v) {
    e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  return Graph::from_edge_list(n, e);
}

void BM_GeneralZagrebExact(benchmark::State& state) {
  const Graph g = random_tree(static_cast<int>(state.range(0)), 1);
  const auto a = ExponentParam::order(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_first_zagreb(g, a));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneralZagrebExact)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_GeneralZagrebReal(benchmark::State& state) {
  const Graph g = random_tree(static_cast<int>(state.range(0)), 1);
  const auto a = ExponentParam::of(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_first_zagreb(g, a));
  }
}
BENCHMARK(BM_GeneralZagrebReal)->RangeMultiplier(4)->Range(64, 16384);

void BM_TwoDistanceDegrees(benchmark::State& state) {
  const Graph g = random_tree(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_distance_degrees(g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoDistanceDegrees)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_LeapCoindex(benchmark::State& state) {
  const Graph g = random_tree(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(first_leap_zagreb_coindex(g));
  }
}
BENCHMARK(BM_LeapCoindex)->RangeMultiplier(4)->Range(64, 4096);

void BM_ZagrebCoindex(benchmark::State& state) {
  const Graph g = random_tree(static_cast<int>(state.range(0)), 4);
  const auto a = ExponentParam::order(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_first_zagreb_coindex(g, a));
  }
}
BENCHMARK(BM_ZagrebCoindex)->RangeMultiplier(4)->Range(64, 4096);

void BM_ClosedFormFromProfile(benchmark::State& state) {
  const DegreeProfile p = degree_profile(random_tree(static_cast<int>(state.range(0)), 5));
  const auto a = ExponentParam::order(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zagreb_formula_min_anchored(p, a));
  }
}
BENCHMARK(BM_ClosedFormFromProfile)->Arg(64)->Arg(4096);

void BM_TetraceneProfile(benchmark::State& state) {
  const auto a = ExponentParam::of(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zagreb_formula_minplus_anchored(tetracene_profile(50), a));
  }
}
BENCHMARK(BM_TetraceneProfile);

}  // namespace
