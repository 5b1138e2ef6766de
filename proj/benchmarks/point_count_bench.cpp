#include <benchmark/benchmark.h>

#include "c2lab/graph_families.hpp"
#include "c2lab/point_count.hpp"

namespace {

void BM_CountZerosK5Decompletion(benchmark::State& state) {
  const auto g = c2lab::decomplete(c2lab::families::complete(5), 0).graph;
  const auto h = c2lab::PolynomialHandle::kirchhoff(g);
  const c2lab::PrimeField f(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c2lab::count_zeros(h, f));
}
BENCHMARK(BM_CountZerosK5Decompletion)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RoutesOctahedron(benchmark::State& state) {
  const auto g = c2lab::families::octahedron();
  const c2lab::PrimeField f(2);
  c2lab::RouteSelection routes{state.range(0) == 0, state.range(0) == 1, state.range(0) == 2};
  for (auto _ : state) benchmark::DoNotOptimize(c2lab::compute_decompletion(g, 0, f, routes));
}
BENCHMARK(BM_RoutesOctahedron)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
