#include <benchmark/benchmark.h>

#include <random>

#include "wps/cohomology.hpp"
#include "wps/ringops.hpp"

using namespace wps;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

void BM_BuildFan(benchmark::State& state) {
  WeightSystem w = normalize_weights(ints({6, 10, 15, 21, 35}));
  for (auto _ : state) benchmark::DoNotOptimize(build_fan(w));
}
BENCHMARK(BM_BuildFan);

void BM_SectorCensus(benchmark::State& state) {
  Fan fan = build_fan(normalize_weights(ints({6, 10, 15, 21, 35})));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_twisted_sectors(fan));
}
BENCHMARK(BM_SectorCensus);

void BM_BettiTable(benchmark::State& state) {
  Fan fan = build_fan(normalize_weights(ints({2, 3, 4, 5, 6, 7})));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(fan));
}
BENCHMARK(BM_BettiTable);

void BM_Snf(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  IntMat a(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(6)->Arg(8);

void BM_ThreePoint(benchmark::State& state) {
  Fan fan = build_fan(normalize_weights(ints({1, 2, 2, 3, 3, 3})));
  auto sectors = enumerate_twisted_sectors(fan);
  auto t = make_triple(fan, sectors[0].g, sectors[0].g);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        three_point(fan, *t, SectorClass::unit(), SectorClass::unit(), SectorClass::unit(), seed++));
  }
}
BENCHMARK(BM_ThreePoint);

void BM_CupTable(benchmark::State& state) {
  Fan fan = build_fan(normalize_weights(ints({2, 3, 5})));
  for (auto _ : state) benchmark::DoNotOptimize(cup_table(fan, 0));
}
BENCHMARK(BM_CupTable);

}  // namespace

BENCHMARK_MAIN();
