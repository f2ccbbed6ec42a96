#ifndef PCRPP_SPLITOFF_HPP_
#define PCRPP_SPLITOFF_HPP_

#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/pcrpp_lp.hpp"
#include "pcrpp/preprocess.hpp"

namespace pcrpp {

// x_vu -= eps, x_vw -= eps, x_uw += eps. With u == w == root the op drops
// 2 eps from x_vr; it is used only when the root is v's last neighbour.
struct SplitOp {
  int v = -1;
  int u = -1;
  int w = -1;
  double eps = 0.0;

  bool operator==(const SplitOp&) const = default;
};

struct SplitTrace {
  std::vector<SplitOp> ops;
  std::vector<int> order;  // split vertices in processing order
  std::vector<std::size_t> boundaries;  // ops of order[i] are [b[i], b[i+1])
};

struct SplitConfig {
  double zero_degree_tol = 1e-7;  // degree treated as zero
  double min_eps = 1e-10;         // smaller admissible amounts are rejected
  int max_ops_per_vertex = 100000;
};

void apply_op(SymMatrix& x, const SplitOp& op);
SymMatrix replay(const SymMatrix& x, const std::vector<SplitOp>& ops);

// Largest eps for which splitting (v; u, w) keeps every min r-t cut at or
// above demand[t]. Only cuts separating v from both u and w shrink (by 2 eps),
// so the bound is read off two constrained min cuts per demanded t.
double admissible_amount(const SymMatrix& x, int root, int v, int u, int w,
                         const std::vector<double>& demand);

struct CompleteSplit {
  SymMatrix x;
  std::vector<SplitOp> ops;
};

// Zeroes the degree of v. `demand[t]` is the required min r-t cut; entries
// for the root and v are ignored. Throws when no pair admits a positive amount
// while the degree is still positive.
CompleteSplit complete_split(const SymMatrix& x, int root, int v,
                             const std::vector<double>& demand,
                             const SplitConfig& config = {});

struct ThresholdSplit {
  SymMatrix x;
  std::vector<double> y;
  SplitTrace trace;
};

// Vertices v with 0 < y_v < delta in nondecreasing (y, id) order.
std::vector<int> split_order(const std::vector<double>& y, int root, double delta);

// Completely splits every vertex with 0 < y*_v < delta.
ThresholdSplit apply_threshold_split(const LpSolution& sol, double delta,
                                     const PreprocessedGraph& pg,
                                     const SplitConfig& config = {});

// Clause-by-clause check of the threshold-split guarantees; empty when all
// hold within tol.
std::string check_threshold_split(const PreprocessedGraph& pg, const LpSolution& sol,
                                  double delta, const ThresholdSplit& ts,
                                  double tol = 1e-6);

}  // namespace pcrpp

#endif  // PCRPP_SPLITOFF_HPP_
