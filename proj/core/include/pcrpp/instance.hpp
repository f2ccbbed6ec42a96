#ifndef PCRPP_INSTANCE_HPP_
#define PCRPP_INSTANCE_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcrpp/common.hpp"

namespace pcrpp {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;  // length
  double p = 0.0;  // profit
};

// Undirected rooted graph with lengths and profits. Vertex ids are 0-based.
// Construct through make_instance or parse_instance, which validate and
// restrict the graph to the root's component.
class Instance {
 public:
  Instance() = default;

  int vertex_count() const { return vertex_count_; }
  int root() const { return root_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Index of the edge joining u and v, or -1.
  int edge_index(int u, int v) const;
  // Edge indices incident to v.
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  double total_profit() const;
  // Profit of positive edges dropped because they were not reachable from the
  // root. Not part of any objective value computed on this instance.
  double detached_profit() const { return detached_profit_; }
  // Label of internal vertex v in the source numbering (1-based).
  int label(int v) const { return labels_[v]; }
  const std::optional<double>& opt_max() const { return opt_max_; }
  void set_opt_max(std::optional<double> value) { opt_max_ = value; }

 private:
  friend Instance make_instance(int, int, std::vector<Edge>,
                                std::optional<double>);
  void build_index();

  int vertex_count_ = 0;
  int root_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> labels_;
  double detached_profit_ = 0.0;
  std::optional<double> opt_max_;
};

// Validates the raw data (0-based ids) and keeps the root component only.
Instance make_instance(int vertex_count, int root, std::vector<Edge> edges,
                       std::optional<double> opt_max = std::nullopt);

// Text format: header `n m r` (1-based root), m lines `u v w p`, `#` comments,
// optional `OPTMAX <value>` line.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

// Rooted closed walk, given as a vertex sequence. [root] is the empty walk.
struct Walk {
  std::vector<int> vertices;

  int length() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
};

Walk trivial_walk(const Instance& inst);

// Traversal count per edge; throws if the walk is not closed at the root or
// steps along a non-edge.
std::vector<int> traversal_counts(const Instance& inst, const Walk& walk);

// Walk length plus profits of the edges never traversed.
double objective(const Instance& inst, const Walk& walk);

}  // namespace pcrpp

#endif  // PCRPP_INSTANCE_HPP_
