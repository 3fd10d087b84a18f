#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eqnorm/eqnorm.hpp"

using namespace eqnorm;

namespace {

const char* kGroups[] = {"C4", "S3", "D4", "Q8", "A4", "S4"};

void BM_SubgroupLattice(benchmark::State& state) {
  GroupPtr g = preset_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(subgroups(g));
  state.SetLabel(g->name());
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 5);

void BM_Normalize(benchmark::State& state) {
  LatticePtr lat = subgroups(preset_group(kGroups[state.range(0)]));
  std::mt19937_64 rng(1);
  RandomExprOptions opts;
  opts.max_depth = 4;
  std::vector<NormExpr> exprs;
  for (int i = 0; i < 64; ++i)
    exprs.push_back(random_expr(lat->subgroup(SubgroupId{static_cast<std::uint32_t>(rng() % lat->size())}), rng, opts));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(exprs[i++ % exprs.size()]));
  state.SetLabel(lat->group().name());
}
BENCHMARK(BM_Normalize)->DenseRange(0, 5);

void BM_EnumerateIndexingSystems(benchmark::State& state) {
  const char* names[] = {"C27", "S3", "D4", "Q8", "A4"};
  LatticePtr lat = subgroups(preset_group(names[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(lat));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_EnumerateIndexingSystems)->DenseRange(0, 4);

void BM_SpanCompose(benchmark::State& state) {
  LatticePtr lat = subgroups(preset_group("S3"));
  auto s = std::make_shared<const Realization>(realize(parse_gset("S3/C2, S3/C3", lat)));
  auto t = std::make_shared<const Realization>(realize(parse_gset("S3/e", lat)));
  std::mt19937_64 rng(2);
  auto a = random_span(s, t, rng, static_cast<std::size_t>(state.range(0)));
  auto b = random_span(t, s, rng, static_cast<std::size_t>(state.range(0)));
  if (!a || !b) {
    state.SkipWithError("no span of that size");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(compose(*a, *b));
}
BENCHMARK(BM_SpanCompose)->Arg(6)->Arg(12)->Arg(18);

void BM_UniverseIndexing(benchmark::State& state) {
  const char* names[] = {"C4", "S3", "D4", "Q8", "A4"};
  LatticePtr lat = subgroups(preset_group(names[state.range(0)]));
  Universe u = mixed_universe(lat, names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(indexing_system_of_universe(u));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_UniverseIndexing)->DenseRange(0, 4);

}  // namespace
BENCHMARK_MAIN();
