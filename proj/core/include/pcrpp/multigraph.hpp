#ifndef PCRPP_MULTIGRAPH_HPP_
#define PCRPP_MULTIGRAPH_HPP_

#include <map>
#include <vector>

#include "pcrpp/common.hpp"
#include "pcrpp/instance.hpp"

namespace pcrpp {

// Edge multiset over vertices 0..n-1; keys are ordered pairs (u < v).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : vertex_count_(vertex_count) {}

  int vertex_count() const { return vertex_count_; }
  void add(int u, int v, int multiplicity = 1);
  // Removes up to `multiplicity` copies; drops the key when none remain.
  void remove(int u, int v, int multiplicity = 1);
  int multiplicity(int u, int v) const;
  int degree(int v) const;
  bool empty() const { return edges_.empty(); }
  int total_multiplicity() const;
  const std::map<EdgeKey, int>& edges() const { return edges_; }

  // Union as multisets.
  void merge(const Multigraph& other);

  bool operator==(const Multigraph& o) const {
    return vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::map<EdgeKey, int> edges_;
};

// Sum of multiplicity times length; every key must be an instance edge.
double multigraph_length(const Instance& inst, const Multigraph& m);

// Sorted set of odd-degree vertices.
std::vector<int> odd_vertices(const Multigraph& m);

// True when the support of m plus `root` forms one connected component.
bool support_connected(const Multigraph& m, int root);

// Closed walk from root using every edge exactly its multiplicity.
// Hierholzer with smallest-neighbour-first choice.
Walk euler_tour(const Multigraph& m, int root);

// Traversal multiset of a walk.
Multigraph walk_multigraph(const Instance& inst, const Walk& walk);

}  // namespace pcrpp

#endif  // PCRPP_MULTIGRAPH_HPP_
