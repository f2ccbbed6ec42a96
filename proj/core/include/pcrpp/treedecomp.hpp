#ifndef PCRPP_TREEDECOMP_HPP_
#define PCRPP_TREEDECOMP_HPP_

#include <string>
#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/lp_backend.hpp"
#include "pcrpp/pcrpp_lp.hpp"
#include "pcrpp/preprocess.hpp"
#include "pcrpp/splitoff.hpp"

namespace pcrpp {

// Ĝ plus a root copy r' = vertex_count - 1 joined to r by e0 of length 0.
struct AuxGraph {
  int vertex_count = 0;
  int root = 0;
  int root_copy = 0;
  SymMatrix w;

  EdgeKey e0() const { return make_key(root, root_copy); }
};

struct AuxLift {
  AuxGraph aux;
  SymMatrix x;
  std::vector<double> y;
};

AuxLift lift_to_aux(const SymMatrix& x, const std::vector<double>& y,
                    const PreprocessedGraph& pg);

// Degree, root-degree and cut constraints of the prize-collecting TSP
// relaxation on the auxiliary graph; empty string when satisfied.
std::string check_aux_feasible(const AuxLift& lift, double tol = 1e-6);

struct RootedTree {
  std::vector<EdgeKey> edges;  // sorted

  std::vector<int> vertices(int root) const;
  bool has_edge(EdgeKey k) const;
  bool has_vertex(int v, int root) const;
  bool operator==(const RootedTree&) const = default;
  bool operator<(const RootedTree& o) const { return edges < o.edges; }
};

struct TreeDistribution {
  std::vector<RootedTree> trees;
  std::vector<double> weights;

  std::size_t size() const { return trees.size(); }
  // Sorts trees and merges duplicates.
  void canonicalize();
};

// Complete splittings of every aux vertex except r and r', in nondecreasing
// order of `key` with id tie-break.
struct AuxSplit {
  SymMatrix x;  // fully split vector
  SplitTrace trace;
};

AuxSplit split_aux(const AuxLift& lift, const std::vector<double>& key,
                   const SplitConfig& config = {});

// Undoes the last `stages` vertex stages of the trace (all when negative),
// maintaining trees whose marginals track the partially restored vector
// minus the e0 indicator.
TreeDistribution reinsert(const AuxLift& lift, const AuxSplit& split, int stages = -1);

TreeDistribution decompose(const AuxLift& lift, const SplitConfig& config = {});

// Marginal identities on the auxiliary graph against (x, y); empty when met.
std::string check_aux_distribution(const TreeDistribution& dist, const AuxGraph& aux,
                                   const SymMatrix& x, const std::vector<double>& y,
                                   double tol = 1e-6);

// Merges r' into r; a cycle through r loses its longest root-incident edge
// (smallest key on ties).
RootedTree project_tree(const RootedTree& tree, const AuxGraph& aux,
                        const PreprocessedGraph& pg);
TreeDistribution project_to_hat(const TreeDistribution& dist, const AuxGraph& aux,
                                const PreprocessedGraph& pg);

bool tree_coupled(const RootedTree& tree, const PreprocessedGraph& pg);
double tree_length(const RootedTree& tree, const PreprocessedGraph& pg);
double expected_length(const TreeDistribution& dist, const PreprocessedGraph& pg);

// Vertex marginals, positive-edge marginals, coupling, expected length and
// tree shape on Ĝ; empty when all hold.
std::string check_hat_distribution(const TreeDistribution& dist,
                                   const PreprocessedGraph& pg, const SymMatrix& x,
                                   const std::vector<double>& y, double tol = 1e-6);

// Edge-profit tree decomposition of a feasible point of the relaxation.
TreeDistribution edge_profit_decomposition(const SymMatrix& x, const std::vector<double>& y,
                                           const PreprocessedGraph& pg,
                                           const SplitConfig& config = {});

// Lift and aux splitting done once from (x*, y*); each threshold replays the
// reinsertion of the vertices with y* >= delta.
class SharedTrace {
 public:
  SharedTrace(const LpSolution& sol, const PreprocessedGraph& pg,
              const SplitConfig& config = {});

  const AuxLift& lift() const { return lift_; }
  const AuxSplit& split() const { return split_; }
  // Aux vector after splitting every vertex with y* < delta.
  SymMatrix aux_vector(double delta) const;
  TreeDistribution aux_distribution(double delta) const;
  TreeDistribution distribution(double delta) const;

 private:
  int stages_for(double delta) const;

  const PreprocessedGraph* pg_;
  std::vector<double> y_star_;
  AuxLift lift_;
  AuxSplit split_;
};

// Desk-scale alternative: enumerate rooted subtrees of the support and find
// weights meeting the marginals with an LP. Throws when the support has more
// than `max_support_edges` edges.
TreeDistribution decompose_by_lp(const AuxLift& lift, lp::Backend& backend,
                                 int max_support_edges = 16);

}  // namespace pcrpp

#endif  // PCRPP_TREEDECOMP_HPP_
