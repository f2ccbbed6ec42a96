#ifndef PCRPP_SHORTEST_PATHS_HPP_
#define PCRPP_SHORTEST_PATHS_HPP_

#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/instance.hpp"

namespace pcrpp {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

// Undirected graph with nonnegative weights.
struct WeightedGraph {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;
};

WeightedGraph length_graph(const Instance& inst);

struct ShortestPathTree {
  int source = 0;
  std::vector<double> dist;  // kInf when unreachable
  std::vector<int> pred;     // -1 for the source and unreachable vertices

  // Vertex sequence source..target; empty when unreachable.
  std::vector<int> path_to(int target) const;
};

// Dijkstra. Among equally short routes the predecessor is the smallest id
// settled earlier, so paths are canonical.
ShortestPathTree shortest_paths(const WeightedGraph& g, int source);

// Full distance matrix and one tree per source.
std::vector<ShortestPathTree> all_pairs_shortest_paths(const WeightedGraph& g);

}  // namespace pcrpp

#endif  // PCRPP_SHORTEST_PATHS_HPP_
