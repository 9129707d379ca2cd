// Parallel kernels against their serial references on generated graphs.

#include <benchmark/benchmark.h>

#include "frustum/cliques.hpp"
#include "frustum/generator.hpp"
#include "frustum/metrics.hpp"

namespace {

using frustum::FrustumGraph;
using frustum::ModelParams;
using frustum::SequenceSpec;

const FrustumGraph& cone_graph() {
  static const FrustumGraph g = [] {
    ModelParams p;
    p.g = SequenceSpec::affine(1, 0);
    p.horizon = 5;  // n = 720
    return frustum::generate(p);
  }();
  return g;
}

const FrustumGraph& edge_frustum_graph() {
  static const FrustumGraph g = [] {
    ModelParams p;
    p.n = 3;
    p.f = SequenceSpec::constant(2);
    p.g = SequenceSpec::constant(2);
    p.horizon = 4;
    return frustum::generate(p);
  }();
  return g;
}

void BM_CliquesParallel(benchmark::State& state) {
  const auto& g = edge_frustum_graph();
  for (auto _ : state) benchmark::DoNotOptimize(frustum::enumerate_k_cliques(g, state.range(0)));
}
void BM_CliquesSerial(benchmark::State& state) {
  const auto& g = edge_frustum_graph();
  for (auto _ : state) benchmark::DoNotOptimize(frustum::serial::enumerate_k_cliques(g, state.range(0)));
}
BENCHMARK(BM_CliquesParallel)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_CliquesSerial)->Arg(2)->Arg(3)->Arg(4);

void BM_DistancesParallel(benchmark::State& state) {
  const auto& g = cone_graph();
  for (auto _ : state) benchmark::DoNotOptimize(frustum::distance_summary(g));
}
void BM_DistancesSerial(benchmark::State& state) {
  const auto& g = cone_graph();
  for (auto _ : state) benchmark::DoNotOptimize(frustum::serial::distance_summary(g));
}
BENCHMARK(BM_DistancesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesSerial)->Unit(benchmark::kMillisecond);

void BM_NeighborEdgesParallel(benchmark::State& state) {
  const auto& g = edge_frustum_graph();
  for (auto _ : state) benchmark::DoNotOptimize(frustum::neighbor_edge_counts(g));
}
void BM_NeighborEdgesSerial(benchmark::State& state) {
  const auto& g = edge_frustum_graph();
  for (auto _ : state) benchmark::DoNotOptimize(frustum::serial::neighbor_edge_counts(g));
}
BENCHMARK(BM_NeighborEdgesParallel);
BENCHMARK(BM_NeighborEdgesSerial);

}  // namespace

BENCHMARK_MAIN();
