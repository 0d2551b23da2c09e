#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "closedfactors/closed_counter.hpp"
#include "closedfactors/enumerator.hpp"
#include "closedfactors/static_index.hpp"

namespace {

using namespace closedfactors;

std::string random_bytes(std::size_t n, int sigma) {
  std::mt19937_64 rng(n * 31 + static_cast<std::size_t>(sigma));
  std::string s(n, '\0');
  for (char& c : s) c = static_cast<char>('a' + rng() % static_cast<unsigned>(sigma));
  return s;
}

void BM_CountOnline(benchmark::State& state) {
  const std::string s = random_bytes(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_online(s).total);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountOnline)->ArgsProduct({{1 << 14, 1 << 17, 1 << 20}, {2, 26}})->Unit(benchmark::kMillisecond);

void BM_CountOffline(benchmark::State& state) {
  const Text t = Text::ingest(random_bytes(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(count_offline(t).total);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountOffline)->ArgsProduct({{1 << 14, 1 << 17, 1 << 20}, {2, 26}})->Unit(benchmark::kMillisecond);

void BM_BuildIndex(benchmark::State& state) {
  const Text t = append_sentinel(Text::ingest(random_bytes(static_cast<std::size_t>(state.range(0)), 26)));
  for (auto _ : state) benchmark::DoNotOptimize(StaticIndex::build(t).node_count());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_Waq(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto idx = StaticIndex::build(append_sentinel(Text::ingest(random_bytes(n, 2))));
  std::mt19937_64 rng(5);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queries(4096);
  for (auto& [pos, len] : queries) {
    pos = static_cast<std::uint32_t>(rng() % n);
    len = 1 + static_cast<std::uint32_t>(rng() % std::min<std::size_t>(64, n - pos));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [pos, len] = queries[k++ & 4095];
    benchmark::DoNotOptimize(idx.waq0(idx.leaf_of0(pos), len));
  }
}
BENCHMARK(BM_Waq)->Arg(1 << 14)->Arg(1 << 20);

void BM_EnumerateDistinct(benchmark::State& state) {
  const Text t = Text::ingest(random_bytes(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) {
    std::size_t emitted = 0;
    enumerate_distinct(t, [&](const ClosedFactor&) { ++emitted; });
    benchmark::DoNotOptimize(emitted);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnumerateDistinct)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
