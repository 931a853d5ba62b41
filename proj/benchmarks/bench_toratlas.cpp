#include <benchmark/benchmark.h>

#include <vector>

#include "toratlas/catalog.hpp"
#include "toratlas/classify.hpp"
#include "toratlas/enumerate.hpp"
#include "toratlas/extend.hpp"

namespace {

using namespace toratlas;

RotationMap ascending(const Graph& g) {
  std::vector<std::vector<int>> rots(g.n);
  for (int v = 0; v < g.n; ++v) rots[v] = g.neighbors(v);
  return from_rotations(g, rots);
}

void BM_FaceTracing(benchmark::State& state) {
  RotationMap m = ascending(builtin("F12"));
  for (auto _ : state) benchmark::DoNotOptimize(face_signature(m));
}
BENCHMARK(BM_FaceTracing);

void BM_GenusScanK33(benchmark::State& state) {
  const Graph g = builtin("K33");
  for (auto _ : state) {
    std::uint64_t toroidal = 0;
    enumerate_rotation_systems(g, [&](std::uint64_t, const RotationMap& m) {
      toroidal += genus_of_map(m) == 1;
    });
    benchmark::DoNotOptimize(toroidal);
  }
}
BENCHMARK(BM_GenusScanK33);

void BM_CanonicalForm(benchmark::State& state) {
  RotationMap m = ascending(builtin("F13"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m));
}
BENCHMARK(BM_CanonicalForm);

void BM_ToroidalClassesK33(benchmark::State& state) {
  const Graph g = builtin("K33");
  for (auto _ : state) benchmark::DoNotOptimize(toroidal_classes(g));
}
BENCHMARK(BM_ToroidalClassesK33);

void BM_ToroidalClassesK5(benchmark::State& state) {
  const Graph g = builtin("K5");
  EnumerationOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toroidal_classes(g, opts));
}
BENCHMARK(BM_ToroidalClassesK5)->Arg(1)->Arg(4);

void BM_ReplayF12(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(replay_cases("F12"));
}
BENCHMARK(BM_ReplayF12);

void BM_SymmetriesHexagonal(benchmark::State& state) {
  RotationMap m = ascending(builtin("K33"));
  for (auto _ : state) benchmark::DoNotOptimize(symmetries(m));
}
BENCHMARK(BM_SymmetriesHexagonal);

}  // namespace

BENCHMARK_MAIN();
