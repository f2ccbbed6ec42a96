#include "pcrpp/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace pcrpp {

void Multigraph::add(int u, int v, int multiplicity) {
  if (u == v) throw Error("multigraph loop");
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw Error("multigraph vertex out of range");
  }
  if (multiplicity <= 0) return;
  edges_[make_key(u, v)] += multiplicity;
}

void Multigraph::remove(int u, int v, int multiplicity) {
  auto it = edges_.find(make_key(u, v));
  if (it == edges_.end()) return;
  it->second -= multiplicity;
  if (it->second <= 0) edges_.erase(it);
}

int Multigraph::multiplicity(int u, int v) const {
  auto it = edges_.find(make_key(u, v));
  return it == edges_.end() ? 0 : it->second;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [k, mult] : edges_) {
    if (k.first == v || k.second == v) d += mult;
  }
  return d;
}

int Multigraph::total_multiplicity() const {
  int s = 0;
  for (const auto& kv : edges_) s += kv.second;
  return s;
}

void Multigraph::merge(const Multigraph& other) {
  for (const auto& [k, mult] : other.edges()) add(k.first, k.second, mult);
}

double multigraph_length(const Instance& inst, const Multigraph& m) {
  double s = 0.0;
  for (const auto& [k, mult] : m.edges()) {
    const int e = inst.edge_index(k.first, k.second);
    if (e < 0) throw Error("multigraph edge is not an instance edge");
    s += mult * inst.edges()[e].w;
  }
  return s;
}

std::vector<int> odd_vertices(const Multigraph& m) {
  std::vector<int> deg(m.vertex_count(), 0);
  for (const auto& [k, mult] : m.edges()) {
    deg[k.first] += mult;
    deg[k.second] += mult;
  }
  std::vector<int> odd;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (deg[v] % 2 != 0) odd.push_back(v);
  }
  return odd;
}

bool support_connected(const Multigraph& m, int root) {
  const int n = m.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& kv : m.edges()) parent[find(kv.first.first)] = find(kv.first.second);
  const int rr = find(root);
  for (const auto& kv : m.edges()) {
    if (find(kv.first.first) != rr) return false;
  }
  return true;
}

Walk euler_tour(const Multigraph& m, int root) {
  Walk walk;
  if (m.empty()) {
    walk.vertices.push_back(root);
    return walk;
  }
  if (!odd_vertices(m).empty()) throw Error("euler_tour: odd-degree vertex present");
  const int n = m.vertex_count();
  std::vector<std::map<int, int>> adj(n);
  for (const auto& [k, mult] : m.edges()) {
    adj[k.first][k.second] += mult;
    adj[k.second][k.first] += mult;
  }
  if (adj[root].empty()) throw Error("euler_tour: root not in multigraph");

  std::vector<int> stack{root};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const int u = stack.back();
    if (adj[u].empty()) {
      circuit.push_back(u);
      stack.pop_back();
      continue;
    }
    auto it = adj[u].begin();  // smallest neighbour id
    const int v = it->first;
    if (--it->second == 0) adj[u].erase(it);
    auto back = adj[v].find(u);
    if (--back->second == 0) adj[v].erase(back);
    stack.push_back(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!adj[v].empty()) throw Error("euler_tour: multigraph support is disconnected");
  }
  std::reverse(circuit.begin(), circuit.end());
  walk.vertices = std::move(circuit);
  return walk;
}

Multigraph walk_multigraph(const Instance& inst, const Walk& walk) {
  Multigraph m(inst.vertex_count());
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    m.add(walk.vertices[i - 1], walk.vertices[i]);
  }
  return m;
}

}  // namespace pcrpp
