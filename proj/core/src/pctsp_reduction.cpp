#include <algorithm>
#include <numeric>

#include "pcrpp/solvers.hpp"
#include "pcrpp/tjoin.hpp"

namespace pcrpp {

double pctsp_value(const PctspInstance& p, const std::vector<int>& tour) {
  const int k = p.dist.size() - 1;
  std::vector<bool> visited(k + 1, false);
  double value = 0.0;
  int cur = 0;
  for (int v : tour) {
    value += p.dist(cur, v);
    visited[v] = true;
    cur = v;
  }
  value += p.dist(cur, 0);
  for (int v = 1; v <= k; ++v) {
    if (!visited[v]) value += p.penalty[v];
  }
  return value;
}

PctspResult pctsp_solve_exact(const PctspInstance& p, int cap) {
  const int k = p.dist.size() - 1;
  if (k > cap) throw Error("pctsp_solve_exact: too many representatives");
  PctspResult out;
  if (k == 0) return out;
  const int full = 1 << k;
  std::vector<double> dp(static_cast<std::size_t>(full) * k, kInf);
  std::vector<int> from(static_cast<std::size_t>(full) * k, -1);
  auto at = [&](int mask, int j) { return static_cast<std::size_t>(mask) * k + j; };
  for (int j = 0; j < k; ++j) dp[at(1 << j, j)] = p.dist(0, j + 1);
  for (int mask = 1; mask < full; ++mask) {
    for (int j = 0; j < k; ++j) {
      const double base = dp[at(mask, j)];
      if (!(mask & (1 << j)) || base == kInf) continue;
      for (int nx = 0; nx < k; ++nx) {
        if (mask & (1 << nx)) continue;
        const double c = base + p.dist(j + 1, nx + 1);
        const std::size_t idx = at(mask | (1 << nx), nx);
        if (c < dp[idx]) {
          dp[idx] = c;
          from[idx] = j;
        }
      }
    }
  }
  double total_penalty = 0.0;
  for (int v = 1; v <= k; ++v) total_penalty += p.penalty[v];
  double best = total_penalty;
  int best_mask = 0, best_last = -1;
  for (int mask = 1; mask < full; ++mask) {
    double pen = 0.0;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1 << j))) pen += p.penalty[j + 1];
    }
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1 << j))) continue;
      const double c = dp[at(mask, j)] + p.dist(j + 1, 0) + pen;
      if (c < best - 1e-12) {
        best = c;
        best_mask = mask;
        best_last = j;
      }
    }
  }
  for (int mask = best_mask, j = best_last; mask != 0;) {
    out.tour.push_back(j + 1);
    const int prev = from[at(mask, j)];
    mask &= ~(1 << j);
    j = prev;
  }
  std::reverse(out.tour.begin(), out.tour.end());
  out.value = best;
  return out;
}

PctspResult pctsp_solve_heuristic(const PctspInstance& p) {
  const int k = p.dist.size() - 1;
  PctspResult out;
  out.exact = false;
  std::vector<bool> used(k + 1, false);
  int cur = 0;
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int v = 1; v <= k; ++v) {
      if (!used[v] && (pick < 0 || p.dist(cur, v) < p.dist(cur, pick))) pick = v;
    }
    used[pick] = true;
    out.tour.push_back(pick);
    cur = pick;
  }
  bool improved = true;
  while (improved) {
    improved = false;
    const double now = pctsp_value(p, out.tour);
    for (std::size_t i = 0; i < out.tour.size(); ++i) {
      std::vector<int> t = out.tour;
      t.erase(t.begin() + static_cast<long>(i));
      if (pctsp_value(p, t) < now - 1e-12) {
        out.tour = std::move(t);
        improved = true;
        break;
      }
    }
  }
  out.value = pctsp_value(p, out.tour);
  return out;
}

Solution pctsp_reduction(const Instance& inst, const ReductionConfig& config) {
  const int n = inst.vertex_count();
  std::vector<int> positive;
  for (int i = 0; i < inst.edge_count(); ++i) {
    if (inst.edges()[i].p > 0) positive.push_back(i);
  }
  const int k = static_cast<int>(positive.size());
  WeightedGraph sub;
  sub.vertex_count = n + k;
  std::vector<int> rep(inst.edge_count(), -1);
  for (int i = 0; i < k; ++i) rep[positive[i]] = n + i;
  for (int i = 0; i < inst.edge_count(); ++i) {
    const Edge& e = inst.edges()[i];
    if (rep[i] < 0) {
      sub.edges.push_back({e.u, e.v, e.w});
    } else {
      sub.edges.push_back({e.u, rep[i], e.w / 2.0});
      sub.edges.push_back({rep[i], e.v, e.w / 2.0});
    }
  }
  std::vector<int> nodes{inst.root()};
  for (int i = 0; i < k; ++i) nodes.push_back(n + i);
  PctspInstance pi;
  pi.dist = SymMatrix(k + 1);
  pi.penalty.assign(k + 1, 0.0);
  for (int a = 0; a <= k; ++a) {
    const ShortestPathTree t = shortest_paths(sub, nodes[a]);
    for (int b = a + 1; b <= k; ++b) pi.dist.set(a, b, t.dist[nodes[b]]);
    if (a > 0) pi.penalty[a] = inst.edges()[positive[a - 1]].p;
  }
  PctspResult res;
  if (config.solver) {
    res = config.solver(pi);
  } else if (k <= config.exact_cap) {
    res = pctsp_solve_exact(pi, config.exact_cap);
  } else {
    res = pctsp_solve_heuristic(pi);
  }

  const PathOracle paths(length_graph(inst));
  Solution out;
  out.stats.exact = res.exact;
  out.walk.vertices.push_back(inst.root());
  int cur = inst.root();
  auto go = [&](int target) {
    const std::vector<int> path = paths.path(cur, target);
    for (std::size_t s = 1; s < path.size(); ++s) out.walk.vertices.push_back(path[s]);
    cur = target;
  };
  for (int node : res.tour) {
    const Edge& e = inst.edges()[positive[node - 1]];
    const bool via_u = paths.dist(cur, e.u) <= paths.dist(cur, e.v);
    go(via_u ? e.u : e.v);
    go(via_u ? e.v : e.u);
  }
  go(inst.root());
  out.value = objective(inst, out.walk);
  out.stats.candidates = 1;
  return out;
}

}  // namespace pcrpp
