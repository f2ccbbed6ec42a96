#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pcrpp/maxflow.hpp"
#include "pcrpp/pcrpp_lp.hpp"
#include "pcrpp/preprocess.hpp"
#include "pcrpp/splitoff.hpp"
#include "test_util.hpp"

namespace pcrpp {
namespace {

double min_root_cut(const SymMatrix& x, int root, int t) {
  return max_flow_min_cut(support_graph(x), t, root).value;
}

TEST(CompleteSplit, ForcedPair) {
  // r = 0, v = 1, u = 2, w = 3.
  SymMatrix x(4);
  x.set(1, 2, 0.7);
  x.set(1, 3, 0.7);
  const CompleteSplit cs = complete_split(x, 0, 1, std::vector<double>(4, 0.0));
  ASSERT_EQ(cs.ops.size(), 1u);
  EXPECT_EQ(cs.ops[0], (SplitOp{1, 2, 3, 0.7}));
  EXPECT_DOUBLE_EQ(cs.x(2, 3), 0.7);
  EXPECT_EQ(cs.x.degree(1), 0.0);
}

TEST(CompleteSplit, OddDegreeRejected) {
  SymMatrix x(3);
  x.set(1, 2, 1.0);
  EXPECT_THROW(complete_split(x, 0, 1, std::vector<double>(3, 0.0)), Error);
}

TEST(CompleteSplit, Chain) {
  // r = 0, c = 1, a = 2; the r-a cut is 1 before and after.
  SymMatrix x(3);
  x.set(0, 1, 1.0);
  x.set(1, 2, 1.0);
  const std::vector<double> demand{0.0, 0.0, 1.0};
  EXPECT_DOUBLE_EQ(min_root_cut(x, 0, 2), 1.0);
  const CompleteSplit cs = complete_split(x, 0, 1, demand);
  ASSERT_EQ(cs.ops.size(), 1u);
  EXPECT_EQ(cs.ops[0], (SplitOp{1, 0, 2, 1.0}));
  EXPECT_DOUBLE_EQ(cs.x(0, 2), 1.0);
  EXPECT_DOUBLE_EQ(min_root_cut(cs.x, 0, 2), 1.0);
}

TEST(CompleteSplit, DemandLimitsAmount) {
  // r = 0, u = 1, w = 2, v = 3, t = 4; unit mass on r-u, r-w, u-v, w-v, v-t, t-r.
  // Splitting v over (u, w) shrinks the cut of {t, v} from 3 by twice the amount.
  SymMatrix x(5);
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 0}}) x.set(a, b, 1.0);
  EXPECT_DOUBLE_EQ(admissible_amount(x, 0, 3, 1, 2, {0, 0, 0, 0, 2.0}), 0.5);
  EXPECT_DOUBLE_EQ(admissible_amount(x, 0, 3, 1, 2, {0, 0, 0, 0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(admissible_amount(x, 0, 3, 1, 2, {0, 0, 0, 0, 0.0}), 1.0);
}

TEST(CompleteSplit, RootLeafDropped) {
  SymMatrix x(3);
  x.set(0, 1, 1.0);
  const CompleteSplit cs = complete_split(x, 0, 1, {0.0, 0.0, 0.0});
  ASSERT_EQ(cs.ops.size(), 1u);
  EXPECT_EQ(cs.ops[0], (SplitOp{1, 0, 0, 0.5}));
  EXPECT_EQ(cs.x(0, 1), 0.0);
  EXPECT_EQ(replay(x, cs.ops), cs.x);
}

TEST(ApplyOp, ReplayMatches) {
  SymMatrix x(3);
  x.set(0, 1, 1.0);
  x.set(0, 2, 1.0);
  const std::vector<SplitOp> ops{{0, 1, 2, 0.25}};
  const SymMatrix y = replay(x, ops);
  EXPECT_EQ(y(0, 1), 0.75);
  EXPECT_EQ(y(0, 2), 0.75);
  EXPECT_EQ(y(1, 2), 0.25);
}

TEST(SplitOrder, NondecreasingWithIdTieBreak) {
  const std::vector<double> y{1.0, 0.5, 0.2, 0.5, 0.0, 0.9};
  EXPECT_EQ(split_order(y, 0, 0.9), (std::vector<int>{2, 1, 3}));
  EXPECT_TRUE(split_order(y, 0, 0.2).empty());
}

LpSolution barrier_half_point() {
  LpSolution sol;
  sol.x = SymMatrix(3);
  sol.x.set(0, 1, 0.5);
  sol.x.set(0, 2, 0.5);
  sol.x.set(1, 2, 0.5);
  sol.y = {1.0, 0.5, 0.5};
  return sol;
}

TEST(ThresholdSplit, Examples) {
  const PreprocessedGraph pg = preprocess(testing::barrier(0.1));
  const LpSolution sol = barrier_half_point();
  ASSERT_EQ(check_lp_feasible(pg, sol.x, sol.y), "");

  const ThresholdSplit low = apply_threshold_split(sol, 0.5, pg);
  EXPECT_TRUE(low.trace.ops.empty());
  EXPECT_EQ(low.x, sol.x);
  EXPECT_EQ(low.y, sol.y);

  const ThresholdSplit high = apply_threshold_split(sol, 0.6, pg);
  EXPECT_EQ(high.x(1, 2), 0.0);
  EXPECT_EQ(high.y[1], 0.0);
  EXPECT_EQ(high.y[2], 0.0);
  EXPECT_EQ(high.x.degree(1), 0.0);
  EXPECT_EQ(high.x.degree(2), 0.0);
  EXPECT_EQ(check_threshold_split(pg, sol, 0.6, high), "");
  EXPECT_EQ(check_threshold_split(pg, sol, 0.5, low), "");
}

TEST(ThresholdSplit, LemmaClausesOnSuite) {
  for (int i = 0; i < 60; ++i) {
    const PreprocessedGraph pg = preprocess(testing::suite_instance(i));
    const LpSolution sol = solve_pcrpp_lp(pg).solution;
    std::set<double> deltas(sol.y.begin(), sol.y.end());
    deltas.insert(1.5);
    for (double delta : deltas) {
      if (delta <= 0) continue;
      const ThresholdSplit ts = apply_threshold_split(sol, delta, pg);
      EXPECT_EQ(check_threshold_split(pg, sol, delta, ts), "") << i << " " << delta;
    }
  }
}

TEST(ThresholdSplit, CutPreservation) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const PreprocessedGraph pg = preprocess(testing::suite_instance(trial));
    const LpSolution sol = solve_pcrpp_lp(pg).solution;
    const double delta = unit(rng);
    const ThresholdSplit ts = apply_threshold_split(sol, delta, pg);
    for (int t = 0; t < pg.vertex_count(); ++t) {
      if (t == pg.root() || ts.y[t] <= 0) continue;
      EXPECT_GE(min_root_cut(ts.x, pg.root(), t), 2.0 * ts.y[t] - 1e-6);
    }
  }
}

TEST(ThresholdSplit, TraceDeterministicAndReplayable) {
  for (int i = 0; i < 30; ++i) {
    const PreprocessedGraph pg = preprocess(testing::suite_instance(i));
    const LpSolution sol = solve_pcrpp_lp(pg).solution;
    const ThresholdSplit a = apply_threshold_split(sol, 1.0, pg);
    const ThresholdSplit b = apply_threshold_split(sol, 1.0, pg);
    EXPECT_EQ(a.trace.ops, b.trace.ops);
    EXPECT_EQ(a.x, b.x);
    const SymMatrix again = replay(sol.x, a.trace.ops);
    for (int u = 0; u < pg.vertex_count(); ++u) {
      for (int v = u + 1; v < pg.vertex_count(); ++v) {
        EXPECT_NEAR(again(u, v), a.x(u, v), 1e-7);
      }
    }
    for (const SplitOp& op : a.trace.ops) EXPECT_GT(op.eps, 0.0);
  }
}

}  // namespace
}  // namespace pcrpp
