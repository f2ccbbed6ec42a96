#ifndef PCRPP_BENCH_HPP_
#define PCRPP_BENCH_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pcrpp/instance.hpp"
#include "pcrpp/solvers.hpp"

namespace pcrpp {

// All objective values include the profit of edges outside the root component.
struct BenchRecord {
  std::string name;
  int vertices = 0;
  int edges = 0;
  std::optional<double> opt;
  double alg = 0.0;
  double red = 0.0;
  double opt_lp = 0.0;
  std::optional<double> alg_gap;
  std::optional<double> red_gap;
  std::optional<double> lp_gap;
  double time_lp = 0.0;
  double time_split = 0.0;
  double time_other = 0.0;
  std::string better;  // ALG, RED or tie
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

// Minimisation optimum from a reported maximisation optimum.
double convert_optimum(const Instance& inst, double opt_max);

// 100 (value - opt) / opt; empty when opt is zero.
std::optional<double> gap_percent(double value, double opt);

struct BenchConfig {
  SolverConfig solver;
  ReductionConfig reduction;
  OracleConfig oracle;
  // Instances solved concurrently.
  int threads = 1;
};

BenchRecord bench_instance(const std::string& name, const Instance& inst,
                           const BenchConfig& config = {});

// Failures to load or solve are recorded in the status field.
std::vector<BenchRecord> run_bench(const std::vector<std::string>& files,
                                   const BenchConfig& config = {});

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::istream& in);

struct FamilySummary {
  std::string family;
  int count = 0;
  int with_opt = 0;
  double avg_alg_gap = 0.0;
  double max_alg_gap = 0.0;
  double avg_red_gap = 0.0;
  double max_red_gap = 0.0;
  double avg_lp_gap = 0.0;
  double max_lp_gap = 0.0;
  double avg_time_lp = 0.0;
  double avg_time_split = 0.0;
  double avg_time_other = 0.0;
  int alg_better = 0;
  int red_better = 0;
  int ties = 0;

  bool operator==(const FamilySummary&) const = default;
};

// Leading letters of the name, "other" when there are none.
std::string family_of(const std::string& name);

// One entry per family in first-seen order, then an "all" entry.
// Failed records are left out.
std::vector<FamilySummary> summarize(const std::vector<BenchRecord>& records);
void write_summary(std::ostream& out, const std::vector<FamilySummary>& summary);

struct RandomSpec {
  int n = 4;
  int m = 5;
  int wmax = 10;
  int pmax = 10;
  double positive_density = 0.5;
};

// Connected instance with integer lengths in [1, wmax] and profits in [1, pmax]
// on a positive_density fraction of edges in expectation; root is vertex 0.
Instance gen_random(std::uint64_t seed, const RandomSpec& spec);

}  // namespace pcrpp

#endif  // PCRPP_BENCH_HPP_
