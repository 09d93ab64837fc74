#include <benchmark/benchmark.h>

#include "hypfan/fansearch.hpp"
#include "hypfan/flow.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/moves.hpp"
#include "hypfan/sphere2.hpp"

using namespace hypfan;

static void BM_BuildAugmented(benchmark::State& state) {
  auto o = generate_octahedral();
  for (auto _ : state) {
    auto r = augment(o.complex, o.fan, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.first.num_faces());
  }
}
BENCHMARK(BM_BuildAugmented)->Arg(1)->Arg(4)->Arg(8);

static void BM_FanCompatibleS3(benchmark::State& state) {
  auto s = generate_s3();
  for (auto _ : state) benchmark::DoNotOptimize(fan_compatible(s.complex, s.fan).ok);
}
BENCHMARK(BM_FanCompatibleS3);

static void BM_FlowOctahedral(benchmark::State& state) {
  auto o = generate_octahedral();
  auto s = skeleton(o.complex);
  Vec w{2, 1};
  for (auto _ : state) {
    auto g = orient_edges(s, o.fan, w);
    benchmark::DoNotOptimize(assign_levels(g));
  }
}
BENCHMARK(BM_FlowOctahedral);

static void BM_SphereSuite(benchmark::State& state) {
  auto o = generate_octahedral();
  auto c = augment(o.complex, o.fan, static_cast<int>(state.range(0))).first;
  for (auto _ : state) benchmark::DoNotOptimize(run_sphere_suite(c).ok());
}
BENCHMARK(BM_SphereSuite)->Arg(0)->Arg(2)->Arg(4);

static void BM_SearchFan(benchmark::State& state) {
  auto o = generate_octahedral();
  auto c = augment(o.complex, o.fan, static_cast<int>(state.range(0))).first;
  for (auto _ : state) benchmark::DoNotOptimize(search_fan(c).status);
}
BENCHMARK(BM_SearchFan)->Arg(0)->Arg(1)->Arg(2);

static void BM_SearchGenus(benchmark::State& state) {
  auto c = genus_complex(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(search_fan(c).status);
}
BENCHMARK(BM_SearchGenus)->Arg(1)->Arg(3);
BENCHMARK_MAIN();
