#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include "pcrpp/bench.hpp"
#include "pcrpp/preprocess.hpp"
#include "test_util.hpp"

namespace pcrpp {
namespace {

TEST(ConvertOptimum, Examples) {
  const Instance ten = make_instance(3, 0, {{0, 1, 1, 4}, {1, 2, 1, 6}});
  EXPECT_EQ(convert_optimum(ten, 4.0), 6.0);
  EXPECT_EQ(convert_optimum(ten, 10.0), 0.0);
  EXPECT_NEAR(convert_optimum(testing::barrier(0.1), 0.0), 1.3, 1e-12);
}

TEST(ConvertOptimum, CountsDetachedProfit) {
  // Edge 2-3 is outside the root component; its profit is still part of Σp.
  const Instance inst = make_instance(4, 0, {{0, 1, 1, 4}, {2, 3, 1, 6}});
  EXPECT_EQ(inst.detached_profit(), 6.0);
  EXPECT_EQ(convert_optimum(inst, 4.0), 6.0);
}

TEST(GapPercent, Formula) {
  EXPECT_NEAR(*gap_percent(2.1, 1.3), 100.0 * 0.8 / 1.3, 1e-12);
  EXPECT_EQ(*gap_percent(5.0, 5.0), 0.0);
  EXPECT_FALSE(gap_percent(1.0, 0.0).has_value());
}

TEST(BenchInstance, Barrier) {
  const BenchRecord r = bench_instance("barrier", testing::barrier(0.1));
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r.opt.has_value());
  EXPECT_NEAR(*r.opt, 1.3, 1e-9);
  EXPECT_NEAR(r.alg, 1.3, 1e-9);
  EXPECT_NEAR(r.red, 2.1, 1e-9);
  EXPECT_NEAR(r.opt_lp, 1.3, 1e-9);
  EXPECT_NEAR(*r.alg_gap, 0.0, 1e-9);
  EXPECT_NEAR(*r.red_gap, 61.538461538, 1e-6);
  EXPECT_NEAR(*r.lp_gap, 0.0, 1e-9);
  EXPECT_EQ(r.better, "ALG");
}

TEST(BenchInstance, OptMaxTakesPrecedence) {
  Instance inst = testing::single_edge();
  inst.set_opt_max(3.0);
  BenchConfig cfg;
  cfg.oracle.edge_cap = 0;
  const BenchRecord r = bench_instance("single", inst, cfg);
  EXPECT_EQ(*r.opt, 2.0);
  const BenchRecord none = bench_instance("single", testing::single_edge(), cfg);
  EXPECT_FALSE(none.opt.has_value());
  EXPECT_FALSE(none.alg_gap.has_value());
}

TEST(RunBench, EmptyList) {
  const std::vector<BenchRecord> records = run_bench({});
  EXPECT_TRUE(records.empty());
  std::ostringstream out;
  write_csv(out, records);
  EXPECT_EQ(out.str(),
            "name,|V|,|E|,OPT,ALG,RED,OPT_LP,ALG gap,RED gap,LP gap,time_lp,time_split,"
            "time_other,better,status\n");
  EXPECT_TRUE(summarize(records).empty());
}

TEST(RunBench, FailuresRecorded) {
  const std::vector<BenchRecord> records =
      run_bench({testing::data_path("no_such_file.txt"), testing::data_path("barrier_01.txt")});
  ASSERT_EQ(records.size(), 2u);
  EXPECT_FALSE(records[0].ok());
  EXPECT_TRUE(records[1].ok());
  const std::vector<FamilySummary> s = summarize(records);
  ASSERT_EQ(s.back().family, "all");
  EXPECT_EQ(s.back().count, 1);
}

std::vector<std::string> bench_files() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(testing::data_path("bench"))) {
    files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

TEST(Csv, RoundTrip) {
  BenchConfig cfg;
  cfg.threads = 2;
  const std::vector<BenchRecord> records = run_bench(bench_files(), cfg);
  std::ostringstream first;
  write_csv(first, records);
  std::istringstream in(first.str());
  const std::vector<BenchRecord> parsed = parse_csv(in);
  ASSERT_EQ(parsed.size(), records.size());
  std::ostringstream second;
  write_csv(second, parsed);
  EXPECT_EQ(first.str(), second.str());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(parsed[i].name, records[i].name);
    EXPECT_NEAR(parsed[i].alg, records[i].alg, 5e-7);
    EXPECT_NEAR(parsed[i].opt_lp, records[i].opt_lp, 5e-7);
    EXPECT_EQ(parsed[i].opt.has_value(), records[i].opt.has_value());
  }
}

TEST(Csv, RejectsBadInput) {
  std::istringstream bad_header("name,ALG\n");
  EXPECT_THROW(parse_csv(bad_header), Error);
}

TEST(Summary, MatchesRecomputation) {
  const std::vector<BenchRecord> records = run_bench(bench_files());
  const std::vector<FamilySummary> summary = summarize(records);
  std::map<std::string, std::vector<BenchRecord>> groups;
  for (const BenchRecord& r : records) {
    groups[family_of(r.name)].push_back(r);
    groups["all"].push_back(r);
  }
  ASSERT_EQ(summary.size(), groups.size());
  for (const FamilySummary& s : summary) {
    const auto& rows = groups.at(s.family);
    EXPECT_EQ(s.count, static_cast<int>(rows.size()));
    double sum = 0.0;
    double mx = -1e300;
    int alg = 0;
    for (const BenchRecord& r : rows) {
      sum += *r.alg_gap;
      mx = std::max(mx, *r.alg_gap);
      if (r.better == "ALG") ++alg;
    }
    EXPECT_EQ(s.avg_alg_gap, sum / rows.size()) << s.family;
    EXPECT_EQ(s.max_alg_gap, mx) << s.family;
    EXPECT_EQ(s.alg_better, alg) << s.family;
  }
  std::ostringstream out;
  write_summary(out, summary);
  EXPECT_NE(out.str().find("all"), std::string::npos);
}

TEST(FamilyOf, LeadingLetters) {
  EXPECT_EQ(family_of("barrier1"), "barrier");
  EXPECT_EQ(family_of("ALBAIDAA.txt"), "ALBAIDAA");
  EXPECT_EQ(family_of("42"), "other");
}

TEST(GenRandom, Examples) {
  const RandomSpec spec{4, 5, 10, 10, 0.5};
  EXPECT_EQ(serialize_instance(gen_random(1, spec)), serialize_instance(gen_random(1, spec)));
  const Instance none = gen_random(3, {6, 9, 10, 10, 0.0});
  EXPECT_EQ(none.total_profit(), 0.0);
  EXPECT_TRUE(preprocess(none).positive_edges().empty());
  const Instance pair = gen_random(5, {2, 1, 10, 10, 1.0});
  EXPECT_EQ(pair.vertex_count(), 2);
  EXPECT_EQ(pair.edge_count(), 1);
  EXPECT_THROW(gen_random(1, {4, 2, 10, 10, 0.5}), Error);
  EXPECT_THROW(gen_random(1, {4, 7, 10, 10, 0.5}), Error);
}

TEST(GenRandom, ConnectedAndBounded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_random(seed, {7, 12, 5, 8, 0.6});
    EXPECT_EQ(inst.vertex_count(), 7);
    EXPECT_EQ(inst.edge_count(), 12);
    EXPECT_EQ(inst.detached_profit(), 0.0);
    for (const Edge& e : inst.edges()) {
      EXPECT_GE(e.w, 1.0);
      EXPECT_LE(e.w, 5.0);
      EXPECT_LE(e.p, 8.0);
      EXPECT_EQ(e.w, std::floor(e.w));
    }
  }
}

}  // namespace
}  // namespace pcrpp
