#ifndef PCRPP_CANDIDATES_HPP_
#define PCRPP_CANDIDATES_HPP_

#include <vector>

#include "pcrpp/instance.hpp"
#include "pcrpp/preprocess.hpp"
#include "pcrpp/tjoin.hpp"
#include "pcrpp/treedecomp.hpp"

namespace pcrpp {

// Minimal subtree of T containing r and every positive edge e of T with
// x_e >= gamma; ({r}, ∅) when no edge qualifies.
RootedTree edge_profit_core(const RootedTree& tree, const PreprocessedGraph& pg,
                            const SymMatrix& x, double gamma);

struct Provenance {
  bool trivial = true;
  double delta = 0.0;
  int tree_index = -1;
  double gamma = 0.0;
};

struct Candidate {
  Walk walk;
  double value = 0.0;
  Provenance provenance;
};

// Restores a core to the original graph, fixes parities with a minimum
// T-join and returns the Euler tour as a candidate.
class CandidateBuilder {
 public:
  CandidateBuilder(const Instance& inst, const PreprocessedGraph& pg);

  Candidate build(const RootedTree& core, const Provenance& provenance) const;
  Candidate trivial() const;

 private:
  const Instance* inst_;
  const PreprocessedGraph* pg_;
  PathOracle paths_;
};

Candidate build_candidate(const Instance& inst, const PreprocessedGraph& pg,
                          const RootedTree& core, const Provenance& provenance);

}  // namespace pcrpp

#endif  // PCRPP_CANDIDATES_HPP_
