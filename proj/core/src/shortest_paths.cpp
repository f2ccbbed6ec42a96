#include "pcrpp/shortest_paths.hpp"

#include <algorithm>
#include <queue>

namespace pcrpp {

WeightedGraph length_graph(const Instance& inst) {
  WeightedGraph g;
  g.vertex_count = inst.vertex_count();
  for (const Edge& e : inst.edges()) g.edges.push_back({e.u, e.v, e.w});
  return g;
}

std::vector<int> ShortestPathTree::path_to(int target) const {
  std::vector<int> path;
  if (dist[target] == kInf) return path;
  for (int v = target; v != -1; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

ShortestPathTree shortest_paths(const WeightedGraph& g, int source) {
  const int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const WeightedEdge& e : g.edges) {
    if (e.w < 0) throw Error("shortest_paths: negative weight");
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n, kInf);
  t.pred.assign(n, -1);
  std::vector<bool> done(n, false);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  t.dist[source] = 0.0;
  pq.push({0.0, source});
  std::vector<int> order;
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u] || d > t.dist[u]) continue;
    done[u] = true;
    order.push_back(u);
    for (auto [v, w] : adj[u]) {
      if (!done[v] && d + w < t.dist[v]) {
        t.dist[v] = d + w;
        pq.push({t.dist[v], v});
      }
    }
  }
  // Canonical predecessors: smallest-id vertex settled earlier on a tight edge.
  std::vector<int> rank(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
  for (int v : order) {
    if (v == source) continue;
    int best = -1;
    for (auto [u, w] : adj[v]) {
      if (rank[u] < 0 || rank[u] >= rank[v]) continue;
      if (t.dist[u] + w == t.dist[v] && (best < 0 || u < best)) best = u;
    }
    if (best < 0) {
      // Rounding left no exactly tight edge; take the closest one.
      double gap = kInf;
      for (auto [u, w] : adj[v]) {
        if (rank[u] < 0 || rank[u] >= rank[v]) continue;
        const double g2 = std::fabs(t.dist[u] + w - t.dist[v]);
        if (g2 < gap) {
          gap = g2;
          best = u;
        }
      }
    }
    t.pred[v] = best;
  }
  return t;
}

std::vector<ShortestPathTree> all_pairs_shortest_paths(const WeightedGraph& g) {
  std::vector<ShortestPathTree> out;
  out.reserve(g.vertex_count);
  for (int s = 0; s < g.vertex_count; ++s) out.push_back(shortest_paths(g, s));
  return out;
}

}  // namespace pcrpp
