#ifndef PCRPP_PCRPP_LP_HPP_
#define PCRPP_PCRPP_LP_HPP_

#include <memory>
#include <string>
#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/lp_backend.hpp"
#include "pcrpp/preprocess.hpp"

namespace pcrpp {

// Fractional point on the complete preprocessed graph.
struct LpSolution {
  SymMatrix x;
  std::vector<double> y;
  double objective = 0.0;
};

struct CutRecord {
  std::vector<int> set;  // S, never containing the root
  int witness = -1;      // v ∈ S
  double slack = 0.0;    // x(δ(S)) - 2 y_v when the cut was found
};

using CutCertificate = std::vector<CutRecord>;

struct LpConfig {
  double feasibility_tol = 1e-7;
  double pricing_tol = 1e-7;
  double snap_tol = 1e-6;
  int max_rounds = 10000;
  // Backend used for every reoptimisation; a DenseSimplex when null.
  std::shared_ptr<lp::Backend> backend;
  bool keep_final_model = false;
};

struct LpRunStats {
  int rounds = 0;
  int cuts_added = 0;
  int columns_priced = 0;
  long simplex_iterations = 0;
};

struct LpResult {
  LpSolution solution;
  CutCertificate cuts;
  LpRunStats stats;
  std::string final_model_lp;  // filled when keep_final_model is set
};

// Σ ŵ x + Σ_{Ê⁺} p̂ (1 - x).
double lp_objective(const PreprocessedGraph& pg, const SymMatrix& x);

// One violated cut per distinct min r-v cut, witness = largest y in S.
std::vector<CutRecord> separate_cuts(const PreprocessedGraph& pg, const SymMatrix& x,
                                     const std::vector<double>& y,
                                     double tol = 1e-7);

LpResult solve_pcrpp_lp(const PreprocessedGraph& pg, const LpConfig& config = {});

// Empty string when (x, y) satisfies every constraint of the relaxation
// within tol (cut constraints checked exactly by min cuts).
std::string check_lp_feasible(const PreprocessedGraph& pg, const SymMatrix& x,
                              const std::vector<double>& y, double tol = 1e-6);

}  // namespace pcrpp

#endif  // PCRPP_PCRPP_LP_HPP_
