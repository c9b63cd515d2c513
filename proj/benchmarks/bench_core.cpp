#include <benchmark/benchmark.h>

#include "pltower/random.hpp"
#include "pltower/report.hpp"
#include "pltower/tower.hpp"
#include "pltower/treepair.hpp"

using namespace pltower;

namespace {

void BM_QuadArithmetic(benchmark::State& state) {
  random::Rng rng(1);
  Number x = Number::surd(random::rational(rng), random::rational(rng), 5);
  Number y = Number::surd(random::rational(rng), random::rational(rng), 5);
  for (auto _ : state) {
    Number z = (x + y) * x.inverse();
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_QuadArithmetic);

void BM_PLCompose(benchmark::State& state) {
  random::Rng rng(2);
  PLMap f = random::f_element(rng, static_cast<int>(state.range(0)));
  PLMap g = random::f_element(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
  state.counters["breakpoints"] = static_cast<double>(f.breakpoints().size() + g.breakpoints().size());
}
BENCHMARK(BM_PLCompose)->Arg(4)->Arg(16)->Arg(64);

void BM_PPCompose(benchmark::State& state) {
  random::Rng rng(3);
  PPMap f = random::pp_element(rng, static_cast<int>(state.range(0)));
  PPMap g = random::pp_element(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_PPCompose)->Arg(4)->Arg(12);

void BM_PPFixSet(benchmark::State& state) {
  random::Rng rng(4);
  PPMap f = random::pp_element(rng, 12);
  for (auto _ : state) benchmark::DoNotOptimize(fix_set(f));
}
BENCHMARK(BM_PPFixSet);

void BM_TreePairRoundTrip(benchmark::State& state) {
  random::Rng rng(5);
  TreePair t = random::tree_pair(rng, 12);
  for (auto _ : state) benchmark::DoNotOptimize(from_plmap(to_plmap(t)));
}
BENCHMARK(BM_TreePairRoundTrip);

void BM_Displace(benchmark::State& state) {
  GeneratingSet<PLMap> h;
  h.add("x0", thompson::x0());
  h.add("x1", thompson::x1());
  IntervalSet interval = IntervalSet::parse("(1/4,3/4)");
  TowerConfig cfg;
  cfg.strategy = state.range(0) == 0 ? Strategy::Greedy : Strategy::Bfs;
  for (auto _ : state) benchmark::DoNotOptimize(displace(h, interval, Interval::open(0, 1), cfg));
}
BENCHMARK(BM_Displace)->Arg(0)->Arg(1);

void BM_BuildTower(benchmark::State& state) {
  random::Rng rng(6);
  auto h = random::pl_subgroup(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_tower(h));
}
BENCHMARK(BM_BuildTower)->DenseRange(1, 6);

void BM_VerifyReport(benchmark::State& state) {
  random::Rng rng(7);
  auto h = random::pl_subgroup(rng, 4, 2);
  std::string json = to_json(build_tower(h));
  for (auto _ : state) benchmark::DoNotOptimize(verify_report(h, report_from_json(json)));
}
BENCHMARK(BM_VerifyReport);

}  // namespace
BENCHMARK_MAIN();
