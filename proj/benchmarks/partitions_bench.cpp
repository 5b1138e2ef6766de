#include <benchmark/benchmark.h>

#include "c2lab/edge_partitions.hpp"
#include "c2lab/graph_families.hpp"
#include "c2lab/spanning.hpp"

namespace {

void BM_SpanningTrees(benchmark::State& state) {
  const auto g = c2lab::families::wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    c2lab::for_each_spanning_tree(g, [&](const c2lab::EdgeSet&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SpanningTrees)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BipartitionCatalog(benchmark::State& state) {
  const auto s = c2lab::split_adjacent_pair(c2lab::families::circulant(8, {1, 2}), 0, 2);
  for (auto _ : state) {
    c2lab::BipartitionCatalog cat(s.graph, s.marked);
    benchmark::DoNotOptimize(cat.size());
  }
}
BENCHMARK(BM_BipartitionCatalog)->Unit(benchmark::kMillisecond);

void BM_PartitionTuples(benchmark::State& state) {
  const auto oct = c2lab::families::octahedron();
  const auto t = c2lab::split_adjacent_pair(oct, oct.edge(0).u, oct.edge(0).v);
  const std::vector<c2lab::VertexPartition> parts = {c2lab::partition_from_labels(t, "a|bcd"),
                                                     c2lab::partition_from_labels(t, "ad|bc")};
  for (auto _ : state) benchmark::DoNotOptimize(c2lab::count_partition_tuples(t.graph, 2, parts));
}
BENCHMARK(BM_PartitionTuples)->Unit(benchmark::kMillisecond);

}  // namespace
