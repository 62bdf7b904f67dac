#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "attisim/attitude_rules.hpp"
#include "attisim/circumplex.hpp"
#include "attisim/seqmine.hpp"

using namespace attisim;

namespace {

std::vector<SignalSequence> make_segments(int count, int length, int alphabet,
                                          unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::vector<SignalSequence> segments(count);
  for (auto& segment : segments) {
    for (int i = 0; i < length; ++i) {
      segment.push_back(std::string(1, static_cast<char>('a' + letter(rng))));
    }
  }
  return segments;
}

void BM_GspMine(benchmark::State& state) {
  const auto segments = make_segments(static_cast<int>(state.range(0)), 8, 10, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp_mine(segments, {0.2, 6}));
  }
}
BENCHMARK(BM_GspMine)->Arg(32)->Arg(128)->Arg(512);

void BM_ClusterDeltas(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> deltas(static_cast<std::size_t>(state.range(0)));
  for (auto& d : deltas) d = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_deltas(deltas, 4));
  }
}
BENCHMARK(BM_ClusterDeltas)->Arg(100)->Arg(1000)->Arg(10000);

void BM_AttitudeTurn(benchmark::State& state) {
  const Personality personality{0.4, 0.6, 0.5, 0.7, 0.3};
  const AffectVector moods{{"exuberant", 0.7}, {"relaxed", 0.4}};
  const auto table = PlacementTable::defaults();
  for (auto _ : state) {
    const auto attitudes = compute_attitudes(moods, personality);
    benchmark::DoNotOptimize(aggregate(attitudes, table));
  }
}
BENCHMARK(BM_AttitudeTurn);

}  // namespace

BENCHMARK_MAIN();
