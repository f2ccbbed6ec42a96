#include "pcrpp/treedecomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "pcrpp/maxflow.hpp"

namespace pcrpp {

AuxLift lift_to_aux(const SymMatrix& x, const std::vector<double>& y,
                    const PreprocessedGraph& pg) {
  const int n = pg.vertex_count();
  const int r = pg.root();
  AuxLift out;
  out.aux.vertex_count = n + 1;
  out.aux.root = r;
  out.aux.root_copy = n;
  out.aux.w = SymMatrix(n + 1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.aux.w.set(u, v, pg.w(u, v));
  }
  for (int v = 0; v < n; ++v) {
    if (v != r) out.aux.w.set(n, v, pg.w(r, v));
  }
  out.aux.w.set(r, n, 0.0);

  out.x = x.grown(1);
  for (int v = 0; v < n; ++v) {
    if (v == r) continue;
    const double half = x(r, v) / 2.0;
    out.x.set(r, v, half);
    out.x.set(n, v, half);
  }
  out.x.set(r, n, 2.0 - x.degree(r) / 2.0);
  out.y = y;
  out.y.push_back(1.0);
  return out;
}

std::string check_aux_feasible(const AuxLift& lift, double tol) {
  std::ostringstream why;
  const AuxGraph& a = lift.aux;
  const int n = a.vertex_count;
  if (lift.x(a.root, a.root_copy) < 1.0 - tol) why << "e0 below 1; ";
  if (std::fabs(lift.y[a.root_copy] - 1.0) > tol) why << "y_r' != 1; ";
  if (std::fabs(lift.x.degree(a.root) - 2.0) > tol) why << "root degree != 2; ";
  for (int v = 0; v < n; ++v) {
    if (v == a.root) continue;
    if (std::fabs(lift.x.degree(v) - 2.0 * lift.y[v]) > tol) why << "degree at " << v << "; ";
  }
  const WeightedGraph cap = support_graph(lift.x);
  for (int v = 0; v < n; ++v) {
    if (v == a.root || lift.y[v] <= tol) continue;
    if (max_flow_min_cut(cap, v, a.root).value < 2.0 * lift.y[v] - tol) {
      why << "cut at " << v << "; ";
    }
  }
  return why.str();
}

std::vector<int> RootedTree::vertices(int root) const {
  std::vector<int> vs{root};
  for (const EdgeKey& k : edges) {
    vs.push_back(k.first);
    vs.push_back(k.second);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool RootedTree::has_edge(EdgeKey k) const {
  return std::binary_search(edges.begin(), edges.end(), k);
}

bool RootedTree::has_vertex(int v, int root) const {
  if (v == root) return true;
  for (const EdgeKey& k : edges) {
    if (k.first == v || k.second == v) return true;
  }
  return false;
}

void TreeDistribution::canonicalize() {
  std::map<RootedTree, double> merged;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (weights[i] > 0) merged[trees[i]] += weights[i];
  }
  trees.clear();
  weights.clear();
  for (auto& [t, w] : merged) {
    trees.push_back(t);
    weights.push_back(w);
  }
}

namespace {

void insert_edge(RootedTree& t, EdgeKey k) {
  auto it = std::lower_bound(t.edges.begin(), t.edges.end(), k);
  if (it == t.edges.end() || *it != k) t.edges.insert(it, k);
}

void erase_edge(RootedTree& t, EdgeKey k) {
  auto it = std::lower_bound(t.edges.begin(), t.edges.end(), k);
  if (it != t.edges.end() && *it == k) t.edges.erase(it);
}

// Vertices reachable from `start` in the tree.
std::vector<int> component(const RootedTree& t, int start) {
  std::vector<int> seen{start};
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    for (const EdgeKey& k : t.edges) {
      int b = -1;
      if (k.first == a) b = k.second;
      if (k.second == a) b = k.first;
      if (b >= 0 && std::find(seen.begin(), seen.end(), b) == seen.end()) {
        seen.push_back(b);
        q.push(b);
      }
    }
  }
  return seen;
}

constexpr double kMassTol = 1e-9;
constexpr double kDust = 1e-11;

class Reinserter {
 public:
  explicit Reinserter(int root) : root_(root) {}

  TreeDistribution dist;

  // Takes `need` of the mass satisfying pred, splitting one tree if required;
  // calls f on each taken tree (by index) with the taken weight.
  template <typename Pred, typename F>
  double take(double need, Pred pred, F f) {
    const std::size_t count = dist.trees.size();
    for (std::size_t i = 0; i < count && need > kDust; ++i) {
      if (dist.weights[i] <= 0 || !pred(dist.trees[i])) continue;
      double amount = std::min(dist.weights[i], need);
      if (dist.weights[i] - amount > kDust) {
        dist.trees.push_back(dist.trees[i]);
        dist.weights.push_back(dist.weights[i] - amount);
        dist.weights[i] = amount;
      } else {
        amount = dist.weights[i];
      }
      f(dist.trees[i], amount);
      need -= amount;
    }
    return need;
  }

  void undo(const SplitOp& op) {
    if (op.u == op.w) throw InternalError("reinsert: root drop cannot be undone");
    const EdgeKey uw = make_key(op.u, op.w);
    std::map<int, double> deficit;
    const double left = take(
        op.eps, [&](const RootedTree& t) { return t.has_edge(uw); },
        [&](RootedTree& t, double m) {
          erase_edge(t, uw);
          if (!t.has_vertex(op.v, root_)) {
            insert_edge(t, make_key(op.v, op.u));
            insert_edge(t, make_key(op.v, op.w));
            return;
          }
          const std::vector<int> side = component(t, op.u);
          const bool v_with_u = std::find(side.begin(), side.end(), op.v) != side.end();
          const int near = v_with_u ? op.u : op.w;
          const int far = v_with_u ? op.w : op.u;
          insert_edge(t, make_key(op.v, far));
          deficit[near] += m;
        });
    if (left > kMassTol) {
      std::ostringstream msg;
      msg << "reinsert: edge " << op.u << "-" << op.w << " short by " << left;
      throw InternalError(msg.str());
    }
    for (const auto& [near, m] : deficit) {
      const double rest = take(
          m,
          [&](const RootedTree& t) {
            return t.has_vertex(near, root_) && !t.has_vertex(op.v, root_);
          },
          [&](RootedTree& t, double) { insert_edge(t, make_key(op.v, near)); });
      if (rest > kMassTol) {
        std::ostringstream msg;
        msg << "reinsert: leaf attachment at " << near << " short by " << rest;
        throw InternalError(msg.str());
      }
    }
  }

 private:
  int root_;
};

}  // namespace

AuxSplit split_aux(const AuxLift& lift, const std::vector<double>& key,
                   const SplitConfig& config) {
  const AuxGraph& a = lift.aux;
  AuxSplit out{lift.x, {}};
  std::vector<double> cur = lift.y;
  for (int v = 0; v < a.vertex_count; ++v) {
    if (v != a.root && v != a.root_copy && cur[v] > 0) out.trace.order.push_back(v);
  }
  std::stable_sort(out.trace.order.begin(), out.trace.order.end(),
                   [&](int p, int q) { return key[p] < key[q]; });
  for (int v : out.trace.order) {
    std::vector<double> demand(cur.size());
    for (std::size_t t = 0; t < cur.size(); ++t) demand[t] = 2.0 * cur[t];
    out.trace.boundaries.push_back(out.trace.ops.size());
    CompleteSplit cs = complete_split(out.x, a.root, v, demand, config);
    out.x = std::move(cs.x);
    out.trace.ops.insert(out.trace.ops.end(), cs.ops.begin(), cs.ops.end());
    cur[v] = 0.0;
  }
  out.trace.boundaries.push_back(out.trace.ops.size());
  return out;
}

TreeDistribution reinsert(const AuxLift& lift, const AuxSplit& split, int stages) {
  const AuxGraph& a = lift.aux;
  Reinserter re(a.root);
  re.dist.trees.push_back(RootedTree{{a.e0()}});
  re.dist.weights.push_back(1.0);
  const int total = static_cast<int>(split.trace.order.size());
  const int stop = stages < 0 ? 0 : std::max(0, total - stages);
  for (int s = total - 1; s >= stop; --s) {
    for (std::size_t i = split.trace.boundaries[s + 1]; i > split.trace.boundaries[s]; --i) {
      re.undo(split.trace.ops[i - 1]);
    }
  }
  re.dist.canonicalize();
  // Trees no heavier than the tolerated shortfall are rounding leftovers;
  // they are dropped and the rest rescaled.
  TreeDistribution out;
  double mass = 0.0;
  for (std::size_t i = 0; i < re.dist.size(); ++i) {
    if (re.dist.weights[i] <= kMassTol) continue;
    out.trees.push_back(re.dist.trees[i]);
    out.weights.push_back(re.dist.weights[i]);
    mass += re.dist.weights[i];
  }
  for (double& w : out.weights) w /= mass;
  return out;
}

TreeDistribution decompose(const AuxLift& lift, const SplitConfig& config) {
  return reinsert(lift, split_aux(lift, lift.y, config));
}

namespace {

bool is_rooted_tree(const RootedTree& t, int root) {
  const std::vector<int> vs = t.vertices(root);
  if (vs.size() != t.edges.size() + 1) return false;
  return component(t, root).size() == vs.size();
}

}  // namespace

std::string check_aux_distribution(const TreeDistribution& dist, const AuxGraph& aux,
                                   const SymMatrix& x, const std::vector<double>& y,
                                   double tol) {
  std::ostringstream why;
  const int n = aux.vertex_count;
  double total = 0.0;
  SymMatrix edge_mass(n);
  std::vector<double> vertex_mass(n, 0.0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double w = dist.weights[i];
    if (w < -tol) why << "negative weight; ";
    total += w;
    if (!is_rooted_tree(dist.trees[i], aux.root)) why << "tree " << i << " malformed; ";
    for (const EdgeKey& k : dist.trees[i].edges) edge_mass.add(k.first, k.second, w);
    for (int v : dist.trees[i].vertices(aux.root)) vertex_mass[v] += w;
  }
  if (std::fabs(total - 1.0) > tol) why << "weights sum to " << total << "; ";
  for (int u = 0; u < n; ++u) {
    if (std::fabs(vertex_mass[u] - y[u]) > tol) {
      why << "vertex " << u << " marginal " << vertex_mass[u] << " vs " << y[u] << "; ";
    }
    for (int v = u + 1; v < n; ++v) {
      double target = x(u, v);
      if (make_key(u, v) == aux.e0()) target -= 1.0;
      if (std::fabs(edge_mass(u, v) - target) > tol) {
        why << "edge " << u << "-" << v << " marginal " << edge_mass(u, v) << " vs "
            << target << "; ";
      }
    }
  }
  return why.str();
}

RootedTree project_tree(const RootedTree& tree, const AuxGraph& aux,
                        const PreprocessedGraph& pg) {
  const int r = aux.root;
  const int rc = aux.root_copy;
  RootedTree out;
  for (const EdgeKey& k : tree.edges) {
    int a = k.first == rc ? r : k.first;
    int b = k.second == rc ? r : k.second;
    if (a == b) continue;
    insert_edge(out, make_key(a, b));
  }
  const std::vector<int> vs = out.vertices(r);
  if (out.edges.size() + 1 == vs.size()) return out;
  if (out.edges.size() != vs.size()) throw InternalError("project_tree: more than one cycle");
  // Peel leaves; what remains is the cycle.
  std::map<int, int> deg;
  for (const EdgeKey& k : out.edges) {
    ++deg[k.first];
    ++deg[k.second];
  }
  std::vector<EdgeKey> alive = out.edges;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      const EdgeKey k = alive[i];
      if (deg[k.first] == 1 || deg[k.second] == 1) {
        --deg[k.first];
        --deg[k.second];
        alive.erase(alive.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  EdgeKey drop{-1, -1};
  double best = -1.0;
  for (const EdgeKey& k : alive) {
    if (k.first != r && k.second != r) continue;
    const double len = pg.w(k.first, k.second);
    if (len > best) {  // keys ascend, so ties keep the smallest
      best = len;
      drop = k;
    }
  }
  if (drop.first < 0) throw InternalError("project_tree: cycle avoids the root");
  if (pg.is_positive(drop.first, drop.second)) {
    throw InternalError("project_tree: would delete a positive edge");
  }
  erase_edge(out, drop);
  return out;
}

TreeDistribution project_to_hat(const TreeDistribution& dist, const AuxGraph& aux,
                                const PreprocessedGraph& pg) {
  TreeDistribution out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    RootedTree t = project_tree(dist.trees[i], aux, pg);
    if (!tree_coupled(t, pg)) throw InternalError("project_to_hat: coupling violated");
    out.trees.push_back(std::move(t));
    out.weights.push_back(dist.weights[i]);
  }
  out.canonicalize();
  return out;
}

bool tree_coupled(const RootedTree& tree, const PreprocessedGraph& pg) {
  const int r = pg.root();
  for (const EdgeKey& k : pg.positive_edges()) {
    const bool e = tree.has_edge(k);
    if (tree.has_vertex(k.first, r) != e || tree.has_vertex(k.second, r) != e) return false;
  }
  return true;
}

double tree_length(const RootedTree& tree, const PreprocessedGraph& pg) {
  double s = 0.0;
  for (const EdgeKey& k : tree.edges) s += pg.w(k.first, k.second);
  return s;
}

double expected_length(const TreeDistribution& dist, const PreprocessedGraph& pg) {
  double s = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) s += dist.weights[i] * tree_length(dist.trees[i], pg);
  return s;
}

std::string check_hat_distribution(const TreeDistribution& dist,
                                   const PreprocessedGraph& pg, const SymMatrix& x,
                                   const std::vector<double>& y, double tol) {
  std::ostringstream why;
  const int n = pg.vertex_count();
  const int r = pg.root();
  double total = 0.0;
  std::vector<double> vm(n, 0.0);
  std::map<EdgeKey, double> em;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const RootedTree& t = dist.trees[i];
    const double w = dist.weights[i];
    total += w;
    if (!is_rooted_tree(t, r)) why << "tree " << i << " malformed; ";
    if (!tree_coupled(t, pg)) why << "tree " << i << " not coupled; ";
    for (int v : t.vertices(r)) vm[v] += w;
    for (const EdgeKey& k : t.edges) em[k] += w;
  }
  if (std::fabs(total - 1.0) > tol) why << "weights sum to " << total << "; ";
  for (int v = 0; v < n; ++v) {
    if (std::fabs(vm[v] - y[v]) > tol) {
      why << "vertex " << v << " marginal " << vm[v] << " vs " << y[v] << "; ";
    }
  }
  for (const EdgeKey& k : pg.positive_edges()) {
    if (std::fabs(em[k] - x(k.first, k.second)) > tol) {
      why << "positive edge " << k.first << "-" << k.second << " marginal; ";
    }
  }
  double lx = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) lx += pg.w(u, v) * x(u, v);
  }
  const double el = expected_length(dist, pg);
  if (el > lx + tol) why << "expected length " << el << " exceeds " << lx << "; ";
  return why.str();
}

TreeDistribution edge_profit_decomposition(const SymMatrix& x, const std::vector<double>& y,
                                           const PreprocessedGraph& pg,
                                           const SplitConfig& config) {
  const AuxLift lift = lift_to_aux(x, y, pg);
  return project_to_hat(decompose(lift, config), lift.aux, pg);
}

SharedTrace::SharedTrace(const LpSolution& sol, const PreprocessedGraph& pg,
                         const SplitConfig& config)
    : pg_(&pg), y_star_(sol.y) {
  lift_ = lift_to_aux(sol.x, sol.y, pg);
  y_star_.push_back(1.0);
  split_ = split_aux(lift_, y_star_, config);
}

int SharedTrace::stages_for(double delta) const {
  int keep = 0;
  for (int v : split_.trace.order) {
    if (y_star_[v] >= delta) ++keep;
  }
  return keep;
}

SymMatrix SharedTrace::aux_vector(double delta) const {
  const int total = static_cast<int>(split_.trace.order.size());
  const std::size_t end = split_.trace.boundaries[total - stages_for(delta)];
  SymMatrix x = lift_.x;
  for (std::size_t i = 0; i < end; ++i) apply_op(x, split_.trace.ops[i]);
  for (int s = 0; s < total - stages_for(delta); ++s) {
    const int v = split_.trace.order[s];
    for (int a = 0; a < x.size(); ++a) {
      if (a != v) x.set(v, a, 0.0);
    }
  }
  return x;
}

TreeDistribution SharedTrace::aux_distribution(double delta) const {
  return reinsert(lift_, split_, stages_for(delta));
}

TreeDistribution SharedTrace::distribution(double delta) const {
  return project_to_hat(aux_distribution(delta), lift_.aux, *pg_);
}

TreeDistribution decompose_by_lp(const AuxLift& lift, lp::Backend& backend,
                                 int max_support_edges) {
  const AuxGraph& a = lift.aux;
  const int n = a.vertex_count;
  std::vector<EdgeKey> support;
  std::vector<double> target;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double t = lift.x(u, v);
      if (make_key(u, v) == a.e0()) t -= 1.0;
      if (t > 1e-12) {
        support.push_back({u, v});
        target.push_back(t);
      }
    }
  }
  const int k = static_cast<int>(support.size());
  if (k > max_support_edges) throw Error("decompose_by_lp: support too large");
  std::vector<RootedTree> trees;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    RootedTree t;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) t.edges.push_back(support[i]);
    }
    if (is_rooted_tree(t, a.root)) trees.push_back(std::move(t));
  }
  lp::Model model;
  for (std::size_t j = 0; j < trees.size(); ++j) model.add_column("", 0.0);
  lp::Row sum{{}, lp::RowSense::kEqual, 1.0, "sum"};
  for (std::size_t j = 0; j < trees.size(); ++j) sum.coefs.push_back({static_cast<int>(j), 1.0});
  model.add_row(sum);
  for (int i = 0; i < k; ++i) {
    lp::Row row{{}, lp::RowSense::kEqual, target[i], ""};
    for (std::size_t j = 0; j < trees.size(); ++j) {
      if (trees[j].has_edge(support[i])) row.coefs.push_back({static_cast<int>(j), 1.0});
    }
    model.add_row(row);
  }
  for (int v = 0; v < n; ++v) {
    if (v == a.root) continue;
    lp::Row row{{}, lp::RowSense::kEqual, lift.y[v], ""};
    for (std::size_t j = 0; j < trees.size(); ++j) {
      if (trees[j].has_vertex(v, a.root)) row.coefs.push_back({static_cast<int>(j), 1.0});
    }
    model.add_row(row);
  }
  const lp::Result res = backend.solve(model);
  if (res.status != lp::Status::kOptimal) throw Error("decompose_by_lp: no distribution");
  TreeDistribution out;
  for (std::size_t j = 0; j < trees.size(); ++j) {
    if (res.x[j] > 1e-12) {
      out.trees.push_back(trees[j]);
      out.weights.push_back(res.x[j]);
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace pcrpp
