#include "pcrpp/tjoin.hpp"

#include <map>

#include "pcrpp/matching.hpp"

namespace pcrpp {

PathOracle::PathOracle(const WeightedGraph& g) : g_(g), trees_(all_pairs_shortest_paths(g)) {}

Multigraph min_tjoin(const PathOracle& oracle, const std::vector<int>& q) {
  const int n = oracle.graph().vertex_count;
  Multigraph out(n);
  if (q.size() % 2 != 0) throw Error("min_tjoin: |Q| is odd");
  const int k = static_cast<int>(q.size());
  SymMatrix d(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double dij = oracle.dist(q[i], q[j]);
      if (dij == kInf) throw Error("min_tjoin: Q vertices in different components");
      d.set(i, j, dij);
    }
  }
  const Pairing pairing = min_perfect_matching(d);
  for (const auto& [i, j] : pairing.pairs) {
    const std::vector<int> path = oracle.path(q[i], q[j]);
    for (std::size_t s = 1; s < path.size(); ++s) out.add(path[s - 1], path[s]);
  }
  Multigraph reduced(n);
  for (const auto& [key, mult] : out.edges()) {
    if (mult % 2 == 1) reduced.add(key.first, key.second);
  }
  return reduced;
}

Multigraph min_tjoin(const WeightedGraph& g, const std::vector<int>& q) {
  return min_tjoin(PathOracle(g), q);
}

double tjoin_length(const WeightedGraph& g, const Multigraph& m) {
  std::map<EdgeKey, double> w;
  for (const WeightedEdge& e : g.edges) {
    const EdgeKey k = make_key(e.u, e.v);
    auto it = w.find(k);
    if (it == w.end() || e.w < it->second) w[k] = e.w;
  }
  double s = 0.0;
  for (const auto& [key, mult] : m.edges()) {
    auto it = w.find(key);
    if (it == w.end()) throw Error("tjoin_length: not an edge");
    s += mult * it->second;
  }
  return s;
}

double min_tjoin_brute_force(const WeightedGraph& g, const std::vector<int>& q) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 20) throw Error("min_tjoin_brute_force: too many edges");
  std::vector<bool> want(g.vertex_count, false);
  for (int v : q) want[v] = true;
  double best = kInf;
  std::vector<int> deg(g.vertex_count);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    double cost = 0.0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        ++deg[g.edges[i].u];
        ++deg[g.edges[i].v];
        cost += g.edges[i].w;
      }
    }
    bool ok = true;
    for (int v = 0; v < g.vertex_count && ok; ++v) ok = (deg[v] % 2 == 1) == want[v];
    if (ok && cost < best) best = cost;
  }
  return best;
}

}  // namespace pcrpp
