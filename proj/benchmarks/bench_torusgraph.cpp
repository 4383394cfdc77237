#include <benchmark/benchmark.h>

#include <string>

#include "torusgraph/classify.hpp"
#include "torusgraph/grid_embedding.hpp"
#include "torusgraph/homology.hpp"
#include "torusgraph/planarity.hpp"
#include "torusgraph/reduction.hpp"
#include "torusgraph/spanning_trees.hpp"
#include "torusgraph/sweep.hpp"

using namespace torusgraph;

namespace {

std::vector<Dir> repeated(const std::string& unit, int k) {
  std::vector<Dir> out;
  for (int i = 0; i < k; ++i) {
    for (char c : unit) out.push_back(c == 'R' ? Dir::Right : Dir::Up);
  }
  return out;
}

// (1,1) loops through every other diagonal of the n x n grid.
GridEmbedding parallel_loops(int n) {
  GridEmbedding e{n, {static_cast<std::size_t>(n / 2), {}}, {}, {}};
  for (int i = 0; i < n / 2; ++i) {
    e.graph.edges.emplace_back(i, i);
    e.positions.push_back({2 * i, 0});
    e.paths.push_back(repeated("RU", n));
  }
  return e;
}

TorusGraph complete_on_grid(std::size_t n) {
  auto all = collect_grid_embeddings(AbstractGraph::complete(n), 5, {1, std::numeric_limits<std::size_t>::max()});
  return all.front().to_torus_graph();
}

}  // namespace

static void BM_ClassifyParallelLoops(benchmark::State& state) {
  const auto g = parallel_loops(static_cast<int>(state.range(0))).to_torus_graph();
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_ClassifyParallelLoops)->Arg(4)->Arg(8)->Arg(16);

static void BM_ValidateEmbedding(benchmark::State& state) {
  const auto g = parallel_loops(static_cast<int>(state.range(0))).to_torus_graph();
  for (auto _ : state) benchmark::DoNotOptimize(validate_embedding(g));
}
BENCHMARK(BM_ValidateEmbedding)->Arg(4)->Arg(8)->Arg(16);

static void BM_SimpleCyclesK4(benchmark::State& state) {
  const auto g = complete_on_grid(4);
  for (auto _ : state) {
    std::size_t n = 0;
    enumerate_simple_cycles(g, kDefaultCycleCap, [&](const Cycle&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SimpleCyclesK4);

static void BM_SpanningTreesComplete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = AbstractGraph::complete(n);
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_spanning_trees(n, g.edges, kDefaultTreeCap, [&](const std::vector<std::size_t>&) { return ++count, true; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SpanningTreesComplete)->Arg(4)->Arg(5)->Arg(6);

static void BM_IsPlanarComplete(benchmark::State& state) {
  const auto g = AbstractGraph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_planar_unpruned(g));
}
BENCHMARK(BM_IsPlanarComplete)->Arg(4)->Arg(5)->Arg(8);

static void BM_GridEnumerationTheta(benchmark::State& state) {
  EnumerationOptions opt;
  opt.max_total_segments = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    enumerate_grid_embeddings(AbstractGraph::theta(3), 4, opt, [&](const GridEmbedding&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_GridEnumerationTheta)->Arg(6)->Arg(8);

static void BM_ReductionOracleExhaustsHopf(benchmark::State& state) {
  const auto e = parallel_loops(4);
  for (auto _ : state) benchmark::DoNotOptimize(reduction_oracle(e, 100'000));
}
BENCHMARK(BM_ReductionOracleExhaustsHopf)->Unit(benchmark::kMillisecond);

static void BM_SmallSweep(benchmark::State& state) {
  SweepOptions opt;
  opt.grid = 3;
  opt.max_edges = static_cast<std::size_t>(state.range(0));
  opt.max_segments = 6;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(opt));
}
BENCHMARK(BM_SmallSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
