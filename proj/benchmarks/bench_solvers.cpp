#include <tricut/cell_finder.hpp>
#include <tricut/generate.hpp>
#include <tricut/jordan.hpp>
#include <tricut/lattice.hpp>
#include <tricut/oracles.hpp>
#include <tricut/wedge.hpp>

#include <benchmark/benchmark.h>

using namespace tricut;

namespace {

void BM_CompleteFace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  auto lines = random_simple_lines({{n, n, n}}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_complete_face(lines).face_id);
  state.SetComplexityN(3 * n);
}
BENCHMARK(BM_CompleteFace)->DenseRange(1, 6)->Complexity();

void BM_CompleteFaceScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  auto lines = random_simple_lines({{n, n, n}}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(scan_all_complete_faces(build_arrangement(lines)).size());
}
BENCHMARK(BM_CompleteFaceScan)->DenseRange(1, 6);

void BM_Wedge111(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  auto pts = random_points({{n, n, n}}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_111_wedge(pts).wedge.sector);
}
BENCHMARK(BM_Wedge111)->DenseRange(1, 5);

void BM_BalancedWedgeSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  auto pts = random_points({{2 * n, 2 * n, 2 * n}}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_balanced_wedge(pts).events_processed);
  state.SetComplexityN(6 * n);
}
BENCHMARK(BM_BalancedWedgeSweep)->RangeMultiplier(2)->Range(1, 16)->Complexity();

void BM_WedgeOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  auto pts = random_points({{2 * n, 2 * n, 2 * n}}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_oracle_wedges(pts, n).size());
}
BENCHMARK(BM_WedgeOracle)->DenseRange(1, 3);

void BM_PlanOps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  int k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_ops(n, k).ops.size());
    k = k % n + 1;
  }
}
BENCHMARK(BM_PlanOps)->RangeMultiplier(8)->Range(8, 4096);

void BM_KArcSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  auto pts = random_circle_points(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_k_arcset(pts, n / 2 + 1).component_count());
  state.SetComplexityN(3 * n);
}
BENCHMARK(BM_KArcSet)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_BalancedLLine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  auto pts = lattice_red_hull(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_balanced_lline(pts).k);
  state.SetComplexityN(3 * n);
}
BENCHMARK(BM_BalancedLLine)->RangeMultiplier(2)->Range(4, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
