#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zagreb/regression.hpp"

namespace {

void BM_Fit(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(i);
    y[i] = 3 + 0.5 * x[i] + noise(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(zagreb::fit(x, y));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Fit)->RangeMultiplier(8)->Range(8, 1 << 15);

}  // namespace
