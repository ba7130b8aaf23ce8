#include <benchmark/benchmark.h>

#include <vector>

#include "zagreb/enumerate.hpp"
#include "zagreb/number.hpp"
#include "zagreb/verify.hpp"

using namespace zagreb;

namespace {

void BM_ConnectedEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = for_each_connected_graph(n, [](const Graph&, std::uint64_t) {});
  }
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_ConnectedEnumeration)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_C3C4FreeEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = for_each_c3c4_free_connected_graph(n, [](const Graph&, std::uint64_t) {});
  }
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_C3C4FreeEnumeration)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_VerifyOrder(benchmark::State& state) {
  const std::vector<ExponentParam> alphas{ExponentParam::of(2), ExponentParam::of(0.5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_order(static_cast<int>(state.range(0)), alphas, 1));
  }
}
BENCHMARK(BM_VerifyOrder)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

}  // namespace
