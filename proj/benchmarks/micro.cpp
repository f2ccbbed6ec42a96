#include <benchmark/benchmark.h>

#include "pcrpp/bench.hpp"
#include "pcrpp/pcrpp_lp.hpp"
#include "pcrpp/preprocess.hpp"
#include "pcrpp/ratiocheck.hpp"
#include "pcrpp/solvers.hpp"
#include "pcrpp/tjoin.hpp"

namespace {

using namespace pcrpp;

Instance sample(int n) {
  return gen_random(42, {n, std::min(n * (n - 1) / 2, 2 * n), 10, 10, 0.5});
}

void BM_Preprocess(benchmark::State& state) {
  const Instance inst = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(preprocess(inst));
}
BENCHMARK(BM_Preprocess)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveLp(benchmark::State& state) {
  const PreprocessedGraph pg = preprocess(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_pcrpp_lp(pg));
}
BENCHMARK(BM_SolveLp)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_BestOfMany(benchmark::State& state) {
  const Instance inst = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(best_of_many(inst));
}
BENCHMARK(BM_BestOfMany)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_PctspReduction(benchmark::State& state) {
  const Instance inst = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pctsp_reduction(inst));
}
BENCHMARK(BM_PctspReduction)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MinTJoin(benchmark::State& state) {
  const Instance inst = sample(static_cast<int>(state.range(0)));
  const PathOracle oracle(length_graph(inst));
  std::vector<int> q;
  for (int v = 0; v + 1 < inst.vertex_count(); v += 2) q.insert(q.end(), {v, v + 1});
  for (auto _ : state) benchmark::DoNotOptimize(min_tjoin(oracle, q));
}
BENCHMARK(BM_MinTJoin)->Arg(16)->Arg(64);

void BM_RatioSweep(benchmark::State& state) {
  const RatioParams p = paper_params();
  for (auto _ : state) benchmark::DoNotOptimize(verify_bound(p, 1e-6L));
}
BENCHMARK(BM_RatioSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
