#include <gtest/gtest.h>

#include <sstream>

#include "pcrpp/solvers.hpp"
#include "test_util.hpp"

namespace pcrpp {
namespace {

Instance zero_profit() { return make_instance(3, 0, {{0, 1, 2, 0}, {1, 2, 3, 0}, {0, 2, 4, 0}}); }

TEST(ExactOracle, Examples) {
  const Solution bar = exact_oracle(testing::barrier(0.1));
  EXPECT_NEAR(bar.value, 1.3, 1e-12);
  EXPECT_EQ(bar.walk.vertices, std::vector<int>{0});
  const Solution single = exact_oracle(testing::single_edge());
  EXPECT_EQ(single.value, 2.0);
  EXPECT_EQ(single.walk.vertices, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(exact_oracle(zero_profit()).value, 0.0);
}

TEST(ExactOracle, EdgeCap) {
  EXPECT_THROW(exact_oracle(testing::load("rand_s3.txt"), {4}), Error);
}

TEST(ExactOracle, FrozenValues) {
  // Optima from an independent brute-force search.
  const std::pair<const char*, double> expected[] = {
      {"gap_s161.txt", 28.0}, {"gap_s228.txt", 31.0}, {"gap_s34.txt", 31.0},
      {"rand_s1.txt", 27.0},  {"rand_s2.txt", 29.0},  {"rand_s3.txt", 19.0},
      {"rand_s4.txt", 13.0},  {"rand_s5.txt", 29.0},  {"rand_s6.txt", 23.0},
      {"rand_s7.txt", 16.0},  {"rand_s8.txt", 34.0},  {"barrier_001.txt", 1.03}};
  for (const auto& [file, value] : expected) {
    const Instance inst = testing::load(file);
    const Solution s = exact_oracle(inst);
    EXPECT_NEAR(s.value, value, 1e-9) << file;
    EXPECT_NEAR(objective(inst, s.walk), s.value, 1e-9) << file;
  }
}

TEST(BestOfMany, Examples) {
  const Solution bar = best_of_many(testing::barrier(0.1));
  EXPECT_NEAR(bar.value, 1.3, 1e-9);
  EXPECT_EQ(bar.walk.vertices, std::vector<int>{0});
  ASSERT_TRUE(bar.lower_bound.has_value());
  EXPECT_NEAR(*bar.lower_bound, 1.3, 1e-9);

  const Solution single = best_of_many(testing::single_edge());
  EXPECT_NEAR(single.value, 2.0, 1e-9);
  EXPECT_EQ(single.walk.vertices, (std::vector<int>{0, 1, 0}));

  const Solution zero = best_of_many(zero_profit());
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_EQ(zero.walk.vertices, std::vector<int>{0});
}

TEST(BestOfMany, FrozenGapInstances) {
  // LP 27 / 30 / 30 against optima 28 / 31 / 31.
  const std::pair<const char*, double> expected[] = {
      {"gap_s161.txt", 30.0}, {"gap_s228.txt", 32.0}, {"gap_s34.txt", 34.0}};
  for (const auto& [file, value] : expected) {
    const Solution s = best_of_many(testing::load(file));
    EXPECT_NEAR(s.value, value, 1e-9) << file;
  }
}

TEST(BestOfMany, HalfIntegralRegressions) {
  // Both once split one endpoint of a positive edge but not the other.
  const Instance second = parse_instance_string(
      "6 8 1\n1 4 5 8\n1 6 5 4\n2 3 8 9\n2 6 2 6\n3 4 4 9\n3 5 1 5\n3 6 1 4\n4 5 9 3\n");
  for (const Instance& inst : {gen_random(1213, {4, 6, 10, 10, 1.0}), second}) {
    for (bool shared : {true, false}) {
      SolverConfig cfg;
      cfg.shared_trace = shared;
      const Solution s = best_of_many(inst, cfg);
      EXPECT_LE(s.value, 1.6 * *s.lower_bound + 1e-6);
      EXPECT_LE(exact_oracle(inst).value, s.value + 1e-9);
    }
  }
}

TEST(BestOfMany, DeterministicAndThreadIndependent) {
  for (int i = 0; i < 20; ++i) {
    const Instance inst = testing::suite_instance(i);
    const Solution a = best_of_many(inst);
    const Solution b = best_of_many(inst);
    SolverConfig cfg;
    cfg.threads = 4;
    const Solution c = best_of_many(inst, cfg);
    EXPECT_EQ(a.walk.vertices, b.walk.vertices);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.walk.vertices, c.walk.vertices);
    EXPECT_EQ(a.stats.candidates, c.stats.candidates);
  }
}

TEST(BestOfMany, SharedAndPerThresholdAgreeOnValue) {
  for (int i = 0; i < 30; ++i) {
    const Instance inst = testing::suite_instance(i);
    SolverConfig per;
    per.shared_trace = false;
    EXPECT_NEAR(best_of_many(inst).value, best_of_many(inst, per).value, 1e-9) << i;
  }
}

TEST(BestOfMany, NeverWorseThanTrivial) {
  for (int i = 0; i < 30; ++i) {
    const Instance inst = testing::suite_instance(i);
    const Solution s = best_of_many(inst);
    EXPECT_LE(s.value, inst.total_profit() + 1e-9);
    EXPECT_NEAR(objective(inst, s.walk), s.value, 1e-9);
    EXPECT_LE(*s.lower_bound, s.value + 1e-6);
    EXPECT_GE(s.stats.candidates, 1);
  }
}

TEST(BestOfMany, DebugDumps) {
  std::ostringstream lp;
  std::ostringstream trees;
  SolverConfig cfg;
  cfg.lp_dump = &lp;
  cfg.distribution_dump = &trees;
  best_of_many(testing::single_edge(), cfg);
  EXPECT_NE(lp.str().find("Subject To"), std::string::npos);
  EXPECT_NE(trees.str().find("weight"), std::string::npos);
}

PctspInstance one_node(double d, double penalty) {
  PctspInstance p;
  p.dist = SymMatrix(2);
  p.dist.set(0, 1, d);
  p.penalty = {0.0, penalty};
  return p;
}

TEST(PctspExact, Examples) {
  PctspInstance empty;
  empty.dist = SymMatrix(1);
  empty.penalty = {0.0};
  EXPECT_TRUE(pctsp_solve_exact(empty).tour.empty());

  const PctspResult visit = pctsp_solve_exact(one_node(0.6, 1.3));
  EXPECT_EQ(visit.tour, std::vector<int>{1});
  EXPECT_NEAR(visit.value, 1.2, 1e-12);

  const PctspResult skip = pctsp_solve_exact(one_node(1.0, 1.5));
  EXPECT_TRUE(skip.tour.empty());
  EXPECT_EQ(skip.value, 1.5);
}

TEST(PctspExact, CapAndHeuristic) {
  PctspInstance p;
  p.dist = SymMatrix(5);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) p.dist.set(i, j, 1.0);
  }
  p.penalty = {0, 5, 5, 5, 5};
  EXPECT_THROW(pctsp_solve_exact(p, 3), Error);
  const PctspResult exact = pctsp_solve_exact(p);
  EXPECT_EQ(exact.value, 5.0);
  const PctspResult h = pctsp_solve_heuristic(p);
  EXPECT_FALSE(h.exact);
  EXPECT_NEAR(h.value, pctsp_value(p, h.tour), 1e-12);
  EXPECT_GE(h.value, exact.value - 1e-12);
}

TEST(PctspReduction, Examples) {
  const Instance bar = testing::barrier(0.1);
  const Solution red = pctsp_reduction(bar);
  EXPECT_NEAR(red.value, 2.1, 1e-12);
  EXPECT_NEAR(objective(bar, red.walk), 2.1, 1e-12);
  EXPECT_EQ(red.walk.length(), 3);

  const Solution zero = pctsp_reduction(zero_profit());
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_EQ(zero.walk.vertices, std::vector<int>{0});

  const Solution single = pctsp_reduction(testing::single_edge());
  EXPECT_EQ(single.value, 2.0);
  EXPECT_EQ(single.walk.vertices, (std::vector<int>{0, 1, 0}));
}

TEST(PctspReduction, PluggableSolver) {
  ReductionConfig cfg;
  int calls = 0;
  cfg.solver = [&](const PctspInstance& p) {
    ++calls;
    PctspResult none;
    none.value = pctsp_value(p, {});
    return none;
  };
  const Solution s = pctsp_reduction(testing::barrier(0.1), cfg);
  EXPECT_EQ(calls, 1);
  EXPECT_NEAR(s.value, 1.3, 1e-12);
}

TEST(PctspReduction, WithinTwiceOptimum) {
  for (int i = 0; i < 100; ++i) {
    const Instance inst = testing::suite_instance(i);
    const Solution red = pctsp_reduction(inst);
    const double opt = exact_oracle(inst).value;
    EXPECT_LE(red.value, 2.0 * opt + 1e-6) << i;
    EXPECT_GE(red.value, opt - 1e-9) << i;
    EXPECT_NEAR(objective(inst, red.walk), red.value, 1e-9);
  }
}

TEST(ParallelFor, CoversRangeAndRethrows) {
  std::vector<int> hit(100, 0);
  parallel_for(100, 4, [&](int i) { hit[i] += 1; });
  EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), 100);
  EXPECT_THROW(parallel_for(10, 3,
                            [](int i) {
                              if (i == 7) throw Error("boom");
                            }),
               Error);
}

}  // namespace
}  // namespace pcrpp
