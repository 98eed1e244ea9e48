#include <benchmark/benchmark.h>

#include "zetatop/explore.hpp"
#include "zetatop/family.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/resolve.hpp"
#include "zetatop/zeta.hpp"

using namespace zetatop;

namespace {

const FixtureCatalog& cat() { return FixtureCatalog::embedded(); }

void BM_ZetaOrdinaryFig1(benchmark::State& state) {
  const ResGraph g = cat().graph("fab_fig1");
  for (auto _ : state) benchmark::DoNotOptimize(zeta_ordinary(g));
}
BENCHMARK(BM_ZetaOrdinaryFig1);

void BM_FastPolesFig1(benchmark::State& state) {
  const ResGraph g = cat().graph("fab_fig1");
  for (auto _ : state) benchmark::DoNotOptimize(fast_poles(g));
}
BENCHMARK(BM_FastPolesFig1);

void BM_CharPolyFig1(benchmark::State& state) {
  const ResGraph g = cat().graph("fab_fig1");
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPolyFig1);

void BM_ResolveFabCurves(benchmark::State& state) {
  const CurveInput c = cat().curves("fab_curves");
  for (auto _ : state) benchmark::DoNotOptimize(resolve(c));
}
BENCHMARK(BM_ResolveFabCurves)->Unit(benchmark::kMillisecond);

void BM_GpqFullResolution(benchmark::State& state) {
  const GpqParams p{2, static_cast<std::int64_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(gpq_full_resolution(p));
}
BENCHMARK(BM_GpqFullResolution)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

// Sweep over x, y with exponents 0..range; forms/s is the headline number.
void BM_SweepFig1(benchmark::State& state) {
  const ResGraph g = cat().graph("fab_fig1");
  const MultTable t = complete_multtable(g, cat().multtable("fab_multtable"));
  const std::string hi = std::to_string(state.range(0));
  const SearchBox box = parse_bounds("x:0.." + hi + ",y:0.." + hi + ",x-y^2:0.." + hi, t);
  SweepOptions opt;
  opt.max_hits = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(g, t, box, opt));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * box.size()));
}
BENCHMARK(BM_SweepFig1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
