#ifndef PCRPP_SOLVERS_HPP_
#define PCRPP_SOLVERS_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pcrpp/candidates.hpp"
#include "pcrpp/instance.hpp"
#include "pcrpp/pcrpp_lp.hpp"
#include "pcrpp/splitoff.hpp"

namespace pcrpp {

struct PhaseTimes {
  double lp = 0.0;
  double split = 0.0;
  double other = 0.0;
};

struct SolverStats {
  int candidates = 0;       // cores evaluated, trivial walk included
  int thresholds = 0;       // distinct outer thresholds processed
  int trees = 0;            // trees over all thresholds
  Provenance best;
  PhaseTimes times;
  LpRunStats lp;
  bool exact = true;        // false when a heuristic stood in for an exact step
};

struct Solution {
  Walk walk;
  double value = 0.0;
  std::optional<double> lower_bound;
  SolverStats stats;
};

struct SolverConfig {
  LpConfig lp;
  SplitConfig split;
  // Split once in the auxiliary graph and replay per threshold.
  bool shared_trace = true;
  int threads = 1;
  // Throw when value > 1.6 * OPT_LP + 1e-6.
  bool check_ratio = true;
  // Optional debug sinks.
  std::ostream* lp_dump = nullptr;
  std::ostream* distribution_dump = nullptr;
};

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

Solution best_of_many(const Instance& inst, const SolverConfig& config = {});

// Prize-collecting TSP on a metric complete graph; node 0 is the root.
struct PctspInstance {
  SymMatrix dist;
  std::vector<double> penalty;  // penalty[0] unused
};

struct PctspResult {
  std::vector<int> tour;  // visited nodes in order, root excluded
  double value = 0.0;     // tour length + skipped penalties
  bool exact = true;
};

using PctspSolver = std::function<PctspResult(const PctspInstance&)>;

double pctsp_value(const PctspInstance& p, const std::vector<int>& tour);

// Subset enumeration with Held-Karp; throws when more than `cap` nodes.
PctspResult pctsp_solve_exact(const PctspInstance& p, int cap = 12);
// Nearest-neighbour tour with greedy node dropping; flagged non-exact.
PctspResult pctsp_solve_heuristic(const PctspInstance& p);

struct ReductionConfig {
  int exact_cap = 12;
  // Used instead of the built-in exact/heuristic pair when set.
  PctspSolver solver;
};

Solution pctsp_reduction(const Instance& inst, const ReductionConfig& config = {});

struct OracleConfig {
  int edge_cap = 12;
};

// Exhaustive search over traversal counts in {0, 1, 2}.
Solution exact_oracle(const Instance& inst, const OracleConfig& config = {});

}  // namespace pcrpp

#endif  // PCRPP_SOLVERS_HPP_
