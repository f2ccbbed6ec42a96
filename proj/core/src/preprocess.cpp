#include "pcrpp/preprocess.hpp"

#include <sstream>

namespace pcrpp {

CopiedGraph copy_vertices(const Instance& inst) {
  CopiedGraph g;
  const int n = inst.vertex_count();
  g.vertex_count = n;
  g.root = inst.root();
  g.copy_map.resize(n);
  for (int v = 0; v < n; ++v) g.copy_map[v] = v;

  std::vector<int> positive_degree(n, 0);
  for (const Edge& e : inst.edges()) {
    if (e.p > 0) {
      ++positive_degree[e.u];
      ++positive_degree[e.v];
    }
  }
  auto needs_copy = [&](int v) {
    return positive_degree[v] > 0 && (v == inst.root() || positive_degree[v] > 1);
  };
  auto fresh_copy = [&](int v) {
    const int c = g.vertex_count++;
    g.copy_map.push_back(v);
    g.edges.push_back({v, c, 0.0, 0.0, -1});
    return c;
  };
  for (int i = 0; i < inst.edge_count(); ++i) {
    const Edge& e = inst.edges()[i];
    if (e.p > 0) {
      const int a = needs_copy(e.u) ? fresh_copy(e.u) : e.u;
      const int b = needs_copy(e.v) ? fresh_copy(e.v) : e.v;
      g.edges.push_back({a, b, e.w, e.p, i});
    } else {
      g.edges.push_back({e.u, e.v, e.w, e.p, i});
    }
  }
  return g;
}

PreprocessedGraph complete(const CopiedGraph& copied) {
  PreprocessedGraph pg;
  const int n = copied.vertex_count;
  pg.n_ = n;
  pg.root_ = copied.root;
  pg.copied_ = copied;
  pg.w_ = SymMatrix(n);
  pg.p_ = SymMatrix(n);
  pg.partner_.assign(n, -1);
  pg.positive_origin_.assign(n, -1);
  pg.copied_index_.assign(static_cast<std::size_t>(n) * n, -1);

  WeightedGraph wg;
  wg.vertex_count = n;
  for (int i = 0; i < static_cast<int>(copied.edges.size()); ++i) {
    const CopiedEdge& e = copied.edges[i];
    wg.edges.push_back({e.u, e.v, e.w});
    pg.copied_index_[static_cast<std::size_t>(e.u) * n + e.v] = i;
    pg.copied_index_[static_cast<std::size_t>(e.v) * n + e.u] = i;
    if (e.p > 0) {
      if (pg.partner_[e.u] >= 0 || pg.partner_[e.v] >= 0) {
        throw InternalError("copied graph violates disjoint positive edges");
      }
      pg.partner_[e.u] = e.v;
      pg.partner_[e.v] = e.u;
      pg.positive_origin_[e.u] = e.origin;
      pg.positive_origin_[e.v] = e.origin;
      pg.positive_.push_back(make_key(e.u, e.v));
    }
  }
  pg.trees_ = all_pairs_shortest_paths(wg);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pg.partner_[u] == v) {
        const CopiedEdge& e =
            copied.edges[pg.copied_index_[static_cast<std::size_t>(u) * n + v]];
        pg.w_.set(u, v, e.w);
        pg.p_.set(u, v, e.p);
      } else {
        const double d = pg.trees_[u].dist[v];
        if (d == kInf) throw Error("complete: copied graph is disconnected");
        pg.w_.set(u, v, d);
      }
    }
  }
  return pg;
}

PreprocessedGraph preprocess(const Instance& inst) {
  return complete(copy_vertices(inst));
}

int PreprocessedGraph::positive_origin(int u, int v) const {
  if (!is_positive(u, v)) return -1;
  return positive_origin_[u];
}

bool PreprocessedGraph::is_tether(int u, int v) const {
  const int i = copied_index_[static_cast<std::size_t>(u) * n_ + v];
  return i >= 0 && copied_.edges[i].origin < 0;
}

std::vector<int> PreprocessedGraph::zero_profit_path(int u, int v) const {
  const EdgeKey k = make_key(u, v);
  return trees_[k.first].path_to(k.second);
}

double PreprocessedGraph::total_positive_profit() const {
  double s = 0.0;
  for (const EdgeKey& k : positive_) s += p_(k.first, k.second);
  return s;
}

Multigraph restore(const PreprocessedGraph& pg, const Instance& inst,
                   const std::vector<EdgeKey>& hat_edges) {
  Multigraph out(inst.vertex_count());
  const CopiedGraph& cg = pg.copied();
  auto add_copied_step = [&](int a, int b) {
    const int ia = cg.copy_map[a];
    const int ib = cg.copy_map[b];
    if (ia != ib) out.add(ia, ib);
  };
  for (const EdgeKey& k : hat_edges) {
    if (pg.is_positive(k.first, k.second)) {
      const Edge& e = inst.edges()[pg.positive_origin(k.first, k.second)];
      out.add(e.u, e.v);
      continue;
    }
    const std::vector<int> path = pg.zero_profit_path(k.first, k.second);
    for (std::size_t i = 1; i < path.size(); ++i) add_copied_step(path[i - 1], path[i]);
  }
  return out;
}

std::string check_preprocessed(const PreprocessedGraph& pg, const Instance& inst) {
  std::ostringstream why;
  const int n = pg.vertex_count();
  const int r = pg.root();
  if (pg.partner(r) >= 0) why << "root touches a positive edge; ";
  std::vector<int> count(n, 0);
  for (const EdgeKey& k : pg.positive_edges()) {
    ++count[k.first];
    ++count[k.second];
    const Edge& e = inst.edges()[pg.positive_origin(k.first, k.second)];
    if (e.w != pg.w(k.first, k.second) || e.p != pg.p(k.first, k.second)) {
      why << "positive edge data changed; ";
    }
  }
  for (int v = 0; v < n; ++v) {
    if (count[v] > 1) why << "vertex " << v << " on two positive edges; ";
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pg.is_positive(u, v)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == u || z == v || pg.is_positive(u, z) || pg.is_positive(z, v)) continue;
        if (pg.w(u, v) > pg.w(u, z) + pg.w(z, v) + kEqualTol) {
          why << "triangle inequality fails on zero-profit edges; ";
          u = v = n;
          break;
        }
      }
    }
  }
  if (n > inst.vertex_count() + 2 * inst.edge_count()) why << "size bound exceeded; ";
  return why.str();
}

}  // namespace pcrpp
