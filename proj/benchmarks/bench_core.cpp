#include <benchmark/benchmark.h>

#include "fixtures.hpp"

namespace {

using namespace ordercone;

void BM_ExtremeRaysFourRay(benchmark::State& state) {
  const MatrixQ f = MatrixQ::from_rows(selftest::four_ray_facets());
  for (auto _ : state) benchmark::DoNotOptimize(extreme_rays(f));
}
BENCHMARK(BM_ExtremeRaysFourRay);

void BM_BuildRandomSpace(benchmark::State& state) {
  selftest::Rng rng(7);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(selftest::random_space(rng, i++));
}
BENCHMARK(BM_BuildRandomSpace);

void BM_LpUpperBound(benchmark::State& state) {
  const OrderedSpace s = selftest::four_ray_space();
  const auto& v = selftest::four_ray_generators();
  const Polyhedron p = upper_bound_polyhedron(s, std::vector<VectorQ>{v[0], v[1]});
  for (auto _ : state) benchmark::DoNotOptimize(lp(s.functionals().row(2), p, Sense::Minimize));
}
BENCHMARK(BM_LpUpperBound);

void BM_EnumerateBands(benchmark::State& state) {
  const OrderedSpace s = state.range(0) == 0 ? selftest::four_ray_space()
                                             : selftest::simplex_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bands(s));
}
BENCHMARK(BM_EnumerateBands)->Arg(0)->Arg(4)->Arg(6);

void BM_Classify(benchmark::State& state) {
  const OrderedSpace s = selftest::four_ray_space();
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
