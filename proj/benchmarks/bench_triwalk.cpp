#include <benchmark/benchmark.h>

#include "triwalk/graph.hpp"
#include "triwalk/operators.hpp"
#include "triwalk/spectral.hpp"
#include "triwalk/triangulation.hpp"
#include "triwalk/walk.hpp"

namespace {

using namespace triwalk;

void BM_FindPartitionDoubleCone(benchmark::State& state) {
  const Graph g = gen_double_cone(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_partition(g));
}
BENCHMARK(BM_FindPartitionDoubleCone)->DenseRange(4, 32, 7);

void BM_FindPartitionComplete(benchmark::State& state) {
  const Graph g = gen_complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_partition(g));
}
BENCHMARK(BM_FindPartitionComplete)->Arg(4)->Arg(7)->Arg(9);

void BM_VerifyMapping(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_double_cone(n);
  const auto pi = canonical_double_cone_partition(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_mapping(g, pi));
  state.SetLabel(std::to_string(2 * g.num_edges()) + " arcs");
}
BENCHMARK(BM_VerifyMapping)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DimensionLedger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_double_cone(n);
  const auto pi = canonical_double_cone_partition(n);
  for (auto _ : state) benchmark::DoNotOptimize(compute_dimension_ledger(g, pi));
}
BENCHMARK(BM_DimensionLedger)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_double_cone(n);
  const OperatorSet ops = build_operators(g, canonical_double_cone_partition(n));
  const WalkState psi = initial_state(ops.arcs, start::Uniform{});
  for (auto _ : state) benchmark::DoNotOptimize(evolve(ops.Uc, psi, 1000, 100));
}
BENCHMARK(BM_Evolve)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
