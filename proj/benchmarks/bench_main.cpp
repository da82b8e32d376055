#include <benchmark/benchmark.h>

#include "plancover/corpus.hpp"
#include "plancover/cover.hpp"
#include "plancover/enumerate.hpp"
#include "plancover/negami.hpp"
#include "plancover/planarity.hpp"
#include "plancover/voltage.hpp"

namespace {

using namespace plancover;

void BM_FaceTracing(benchmark::State& state) {
  EmbeddingScheme s = slit_double_cover_of_k4().scheme;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.faces());
  }
}
BENCHMARK(BM_FaceTracing);

void BM_EulerCharacteristic(benchmark::State& state) {
  EmbeddingScheme s = k4_planar_scheme();
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.euler_characteristic());
  }
}
BENCHMARK(BM_EulerCharacteristic);

void BM_RotationSystemSweep(benchmark::State& state) {
  GraphPtr g = q3();
  for (auto _ : state) {
    std::uint64_t spheres = 0;
    enumerate_rotation_systems(g, {}, [&](const EmbeddingScheme& s) {
      spheres += s.euler_characteristic() == 2;
      return true;
    });
    benchmark::DoNotOptimize(spheres);
  }
}
BENCHMARK(BM_RotationSystemSweep);

void BM_PlanarEmbed(benchmark::State& state) {
  GraphPtr g = q3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(planar_embed(g));
  }
}
BENCHMARK(BM_PlanarEmbed);

void BM_DeckGroup(benchmark::State& state) {
  CoverMap f = antipodal_cover_of_k4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(deck_group(f));
  }
}
BENCHMARK(BM_DeckGroup);

void BM_DoubleCovers(benchmark::State& state) {
  GraphPtr g = k4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(connected_double_covers(g));
  }
}
BENCHMARK(BM_DoubleCovers);

void BM_EmbeddingSweepWithConditions(benchmark::State& state) {
  CoverMap f = antipodal_cover_of_k4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_pev_any_embedding(f));
  }
}
BENCHMARK(BM_EmbeddingSweepWithConditions);

}  // namespace

BENCHMARK_MAIN();
