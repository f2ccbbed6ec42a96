#include "pcrpp/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace pcrpp {
namespace {

class Dinic {
 public:
  explicit Dinic(int n) : n_(n), head_(n, -1) {}

  void add_undirected(int u, int v, double cap) {
    add_arc(u, v, cap);
    add_arc(v, u, cap);
    partner_.push_back(static_cast<int>(to_.size()) - 1);
    partner_.push_back(static_cast<int>(to_.size()) - 2);
  }

  double run(int s, int t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      it_ = head_;
      while (true) {
        const double f = dfs(s, t, kInf);
        if (f <= kEps) break;
        flow += f;
      }
    }
    return flow;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(n_, false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = next_[a]) {
        if (cap_[a] > kEps && !seen[to_[a]]) {
          seen[to_[a]] = true;
          q.push(to_[a]);
        }
      }
    }
    return seen;
  }

 private:
  static constexpr double kEps = 1e-13;

  void add_arc(int u, int v, double cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    level_.assign(n_, -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = next_[a]) {
        if (cap_[a] > kEps && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          q.push(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(int u, int t, double limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a >= 0; a = next_[a]) {
      const int v = to_[a];
      if (cap_[a] <= kEps || level_[v] != level_[u] + 1) continue;
      const double f = dfs(v, t, std::min(limit, cap_[a]));
      if (f > kEps) {
        cap_[a] -= f;
        cap_[partner_[a]] += f;
        return f;
      }
    }
    return 0.0;
  }

  int n_;
  std::vector<int> head_, next_, to_, partner_, level_, it_;
  std::vector<double> cap_;
};

}  // namespace

MinCut max_flow_min_cut(const WeightedGraph& capacities,
                        const std::vector<int>& sources,
                        const std::vector<int>& sinks) {
  const int n = capacities.vertex_count;
  const int s = n;
  const int t = n + 1;
  double big = 1.0;
  for (const WeightedEdge& e : capacities.edges) big += e.w;
  Dinic d(n + 2);
  for (const WeightedEdge& e : capacities.edges) {
    if (e.w > 0) d.add_undirected(e.u, e.v, e.w);
  }
  for (int v : sources) d.add_undirected(s, v, big);
  for (int v : sinks) d.add_undirected(v, t, big);
  MinCut cut;
  cut.value = d.run(s, t);
  std::vector<bool> side = d.reachable(s);
  cut.source_side.assign(side.begin(), side.begin() + n);
  return cut;
}

MinCut max_flow_min_cut(const WeightedGraph& capacities, int s, int t) {
  if (s == t) throw Error("max_flow_min_cut: s == t");
  return max_flow_min_cut(capacities, std::vector<int>{s}, std::vector<int>{t});
}

WeightedGraph support_graph(const SymMatrix& x, double threshold) {
  WeightedGraph g;
  g.vertex_count = x.size();
  for (int u = 0; u < x.size(); ++u) {
    for (int v = u + 1; v < x.size(); ++v) {
      if (x(u, v) > threshold) g.edges.push_back({u, v, x(u, v)});
    }
  }
  return g;
}

double cut_value(const SymMatrix& x, const std::vector<bool>& in_set) {
  double s = 0.0;
  for (int u = 0; u < x.size(); ++u) {
    for (int v = u + 1; v < x.size(); ++v) {
      if (in_set[u] != in_set[v]) s += x(u, v);
    }
  }
  return s;
}

}  // namespace pcrpp
