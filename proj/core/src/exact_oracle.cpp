#include <numeric>

#include "pcrpp/solvers.hpp"

namespace pcrpp {

Solution exact_oracle(const Instance& inst, const OracleConfig& config) {
  const int m = inst.edge_count();
  const int n = inst.vertex_count();
  if (m > config.edge_cap) throw Error("exact_oracle: edge cap exceeded");
  const auto& edges = inst.edges();
  std::vector<int> x(m, 0);
  std::vector<int> best_x(m, 0);
  double best = inst.total_profit();
  std::vector<int> deg(n), parent(n);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  while (true) {
    // Next vector in base 3.
    int i = 0;
    while (i < m && x[i] == 2) x[i++] = 0;
    if (i == m) break;
    ++x[i];

    std::fill(deg.begin(), deg.end(), 0);
    double value = 0.0;
    for (int e = 0; e < m; ++e) {
      if (x[e] == 0) {
        value += edges[e].p;
      } else {
        value += x[e] * edges[e].w;
        deg[edges[e].u] += x[e];
        deg[edges[e].v] += x[e];
      }
    }
    if (value >= best - 1e-12) continue;
    bool even = true;
    for (int v = 0; v < n && even; ++v) even = deg[v] % 2 == 0;
    if (!even) continue;
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < m; ++e) {
      if (x[e] > 0) parent[find(edges[e].u)] = find(edges[e].v);
    }
    const int root_set = find(inst.root());
    bool connected = true;
    for (int e = 0; e < m && connected; ++e) {
      if (x[e] > 0) connected = find(edges[e].u) == root_set;
    }
    if (!connected) continue;
    best = value;
    best_x = x;
  }
  Multigraph mg(n);
  for (int e = 0; e < m; ++e) mg.add(edges[e].u, edges[e].v, best_x[e]);
  Solution out;
  out.walk = euler_tour(mg, inst.root());
  out.value = objective(inst, out.walk);
  out.stats.candidates = 1;
  return out;
}

}  // namespace pcrpp
