#ifndef PCRPP_MAXFLOW_HPP_
#define PCRPP_MAXFLOW_HPP_

#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/shortest_paths.hpp"

namespace pcrpp {

struct MinCut {
  double value = 0.0;
  std::vector<bool> source_side;  // residual reachability from the sources
};

// Undirected max flow (Dinic). `edges[i].w` is the capacity.
MinCut max_flow_min_cut(const WeightedGraph& capacities, int s, int t);

// Same with super terminals: every vertex of `sources` on the source side,
// every vertex of `sinks` on the sink side.
MinCut max_flow_min_cut(const WeightedGraph& capacities,
                        const std::vector<int>& sources,
                        const std::vector<int>& sinks);

// Capacities taken from the positive entries of a dense symmetric matrix.
WeightedGraph support_graph(const SymMatrix& x, double threshold = 0.0);

// Value of x(δ(S)).
double cut_value(const SymMatrix& x, const std::vector<bool>& in_set);

}  // namespace pcrpp

#endif  // PCRPP_MAXFLOW_HPP_
