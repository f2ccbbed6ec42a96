#ifndef PCRPP_TJOIN_HPP_
#define PCRPP_TJOIN_HPP_

#include <vector>

#include "pcrpp/multigraph.hpp"
#include "pcrpp/shortest_paths.hpp"

namespace pcrpp {

// Shortest paths from every vertex, computed once per graph.
class PathOracle {
 public:
  explicit PathOracle(const WeightedGraph& g);
  const WeightedGraph& graph() const { return g_; }
  double dist(int u, int v) const { return trees_[u].dist[v]; }
  std::vector<int> path(int u, int v) const { return trees_[u].path_to(v); }

 private:
  WeightedGraph g_;
  std::vector<ShortestPathTree> trees_;
};

// Minimum-length edge set whose odd-degree vertices are exactly Q.
// Q is matched under the shortest-path metric, pairs are expanded to paths
// and the union is reduced mod 2.
Multigraph min_tjoin(const WeightedGraph& g, const std::vector<int>& q);
Multigraph min_tjoin(const PathOracle& oracle, const std::vector<int>& q);

// Total weight of a multigraph over g (keys must be edges of g).
double tjoin_length(const WeightedGraph& g, const Multigraph& m);

// Exhaustive search over edge subsets (at most 20 edges).
double min_tjoin_brute_force(const WeightedGraph& g, const std::vector<int>& q);

}  // namespace pcrpp

#endif  // PCRPP_TJOIN_HPP_
