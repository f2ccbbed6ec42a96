#ifndef PCRPP_PREPROCESS_HPP_
#define PCRPP_PREPROCESS_HPP_

#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/instance.hpp"
#include "pcrpp/multigraph.hpp"
#include "pcrpp/shortest_paths.hpp"

namespace pcrpp {

struct CopiedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
  double p = 0.0;
  int origin = -1;  // instance edge index; -1 for tethers
};

// Graph after the vertex-copying step. Vertices 0..n-1 keep their instance
// ids; copies are appended.
struct CopiedGraph {
  int vertex_count = 0;
  int root = 0;
  std::vector<CopiedEdge> edges;
  std::vector<int> copy_map;  // copied vertex -> instance vertex
};

CopiedGraph copy_vertices(const Instance& inst);

// Complete graph on the copied vertices. A positive pair keeps its own edge;
// every other pair carries a zero-profit edge whose length is the copied-graph
// distance, realised by a stored canonical path.
class PreprocessedGraph {
 public:
  int vertex_count() const { return n_; }
  int root() const { return root_; }
  double w(int u, int v) const { return w_(u, v); }
  double p(int u, int v) const { return p_(u, v); }
  bool is_positive(int u, int v) const { return u != v && partner_[u] == v; }
  // Other endpoint of the positive edge at v, or -1.
  int partner(int v) const { return partner_[v]; }
  const std::vector<EdgeKey>& positive_edges() const { return positive_; }
  // Instance edge realising a positive pair.
  int positive_origin(int u, int v) const;
  int copy_of(int v) const { return copied_.copy_map[v]; }
  const CopiedGraph& copied() const { return copied_; }
  bool is_tether(int u, int v) const;
  // Copied-graph vertex path realising w(u, v) for a zero-profit pair, from
  // min(u, v) to max(u, v).
  std::vector<int> zero_profit_path(int u, int v) const;
  double total_positive_profit() const;

 private:
  friend PreprocessedGraph complete(const CopiedGraph& copied);

  int n_ = 0;
  int root_ = 0;
  SymMatrix w_;
  SymMatrix p_;
  std::vector<int> partner_;
  std::vector<EdgeKey> positive_;
  std::vector<int> positive_origin_;  // indexed like partner_
  CopiedGraph copied_;
  std::vector<ShortestPathTree> trees_;
  std::vector<int> copied_index_;  // n*n -> copied edge index or -1
};

PreprocessedGraph complete(const CopiedGraph& copied);
PreprocessedGraph preprocess(const Instance& inst);

// Multiset of Ĝ edges mapped back to an instance multigraph.
Multigraph restore(const PreprocessedGraph& pg, const Instance& inst,
                   const std::vector<EdgeKey>& hat_edges);

// Checks P1, P2, P3 and the size bound; returns an empty string on success.
std::string check_preprocessed(const PreprocessedGraph& pg, const Instance& inst);

}  // namespace pcrpp

#endif  // PCRPP_PREPROCESS_HPP_
