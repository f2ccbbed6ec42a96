#include "pcrpp/splitoff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pcrpp/maxflow.hpp"

namespace pcrpp {

void apply_op(SymMatrix& x, const SplitOp& op) {
  if (op.u == op.w) {
    x.add(op.v, op.u, -2.0 * op.eps);
    if (std::fabs(x(op.v, op.u)) < 1e-12) x.set(op.v, op.u, 0.0);
    return;
  }
  x.add(op.v, op.u, -op.eps);
  x.add(op.v, op.w, -op.eps);
  x.add(op.u, op.w, op.eps);
  for (int a : {op.u, op.w}) {
    if (std::fabs(x(op.v, a)) < 1e-12) x.set(op.v, a, 0.0);
  }
}

SymMatrix replay(const SymMatrix& x, const std::vector<SplitOp>& ops) {
  SymMatrix out = x;
  for (const SplitOp& op : ops) apply_op(out, op);
  return out;
}

double admissible_amount(const SymMatrix& x, int root, int v, int u, int w,
                         const std::vector<double>& demand) {
  double eps = std::min(x(v, u), x(v, w));
  const WeightedGraph cap = support_graph(x);
  for (int t = 0; t < x.size() && eps > 0; ++t) {
    if (t == root || t == v || demand[t] <= 0) continue;
    // S ∋ t, v and S ∌ r, u, w.
    if (t != u && t != w) {
      const double c = max_flow_min_cut(cap, {t, v}, {root, u, w}).value;
      eps = std::min(eps, (c - demand[t]) / 2.0);
    }
    // S ∋ t, u, w and S ∌ r, v.
    if (u != root && w != root) {
      const double c = max_flow_min_cut(cap, {t, u, w}, {root, v}).value;
      eps = std::min(eps, (c - demand[t]) / 2.0);
    }
  }
  return std::max(eps, 0.0);
}

CompleteSplit complete_split(const SymMatrix& x, int root, int v,
                             const std::vector<double>& demand,
                             const SplitConfig& config) {
  CompleteSplit out{x, {}};
  const int n = x.size();
  for (int iter = 0;; ++iter) {
    if (iter > config.max_ops_per_vertex) {
      throw InternalError("complete_split: operation limit reached");
    }
    if (out.x.degree(v) <= config.zero_degree_tol) break;
    std::vector<int> nb;
    for (int a = 0; a < n; ++a) {
      if (a != v && out.x(v, a) > 0) nb.push_back(a);
    }
    if (nb.size() == 1 && nb[0] == root) {
      // Only the root is left. Taking v out of any set S ∌ r lowers x(δ(S))
      // by exactly x_vr, so dropping that mass keeps every demanded cut.
      SplitOp op{v, root, root, out.x(v, root) / 2.0};
      apply_op(out.x, op);
      out.ops.push_back(op);
      continue;
    }
    std::stable_sort(nb.begin(), nb.end(),
                     [&](int a, int b) { return out.x(v, a) > out.x(v, b); });
    bool done = false;
    for (std::size_t i = 0; i < nb.size() && !done; ++i) {
      for (std::size_t j = i + 1; j < nb.size() && !done; ++j) {
        const double eps = admissible_amount(out.x, root, v, nb[i], nb[j], demand);
        if (eps > config.min_eps) {
          SplitOp op{v, nb[i], nb[j], eps};
          apply_op(out.x, op);
          out.ops.push_back(op);
          done = true;
        }
      }
    }
    if (!done) {
      std::ostringstream msg;
      msg << "complete_split: no feasible pair at vertex " << v << " with degree "
          << out.x.degree(v);
      throw Error(msg.str());
    }
  }
  for (int a = 0; a < n; ++a) {
    if (a != v) out.x.set(v, a, 0.0);
  }
  return out;
}

std::vector<int> split_order(const std::vector<double>& y, int root, double delta) {
  std::vector<int> order;
  for (int v = 0; v < static_cast<int>(y.size()); ++v) {
    if (v != root && y[v] > 0 && y[v] < delta) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return y[a] < y[b]; });
  return order;
}

ThresholdSplit apply_threshold_split(const LpSolution& sol, double delta,
                                     const PreprocessedGraph& pg,
                                     const SplitConfig& config) {
  const int r = pg.root();
  ThresholdSplit ts{sol.x, sol.y, {}};
  ts.trace.order = split_order(sol.y, r, delta);
  for (int v : ts.trace.order) {
    std::vector<double> demand(ts.y.size());
    for (std::size_t t = 0; t < demand.size(); ++t) demand[t] = 2.0 * ts.y[t];
    ts.trace.boundaries.push_back(ts.trace.ops.size());
    CompleteSplit cs = complete_split(ts.x, r, v, demand, config);
    ts.x = std::move(cs.x);
    ts.trace.ops.insert(ts.trace.ops.end(), cs.ops.begin(), cs.ops.end());
    ts.y[v] = 0.0;
  }
  ts.trace.boundaries.push_back(ts.trace.ops.size());
  return ts;
}

std::string check_threshold_split(const PreprocessedGraph& pg, const LpSolution& sol,
                                  double delta, const ThresholdSplit& ts, double tol) {
  std::ostringstream why;
  const int n = pg.vertex_count();
  const int r = pg.root();
  const std::string feas = check_lp_feasible(pg, ts.x, ts.y, tol);
  if (!feas.empty()) why << "infeasible: " << feas;
  for (int v = 0; v < n; ++v) {
    if (v == r) continue;
    const double expect = sol.y[v] < delta ? 0.0 : sol.y[v];
    if (std::fabs(ts.y[v] - expect) > tol) why << "y dichotomy at " << v << "; ";
    if (sol.y[v] > 0 && sol.y[v] < delta && ts.x.degree(v) > tol) {
      why << "split vertex " << v << " keeps degree; ";
    }
  }
  for (const EdgeKey& k : pg.positive_edges()) {
    const double xs = sol.x(k.first, k.second);
    const double expect = xs < delta ? 0.0 : xs;
    if (std::fabs(ts.x(k.first, k.second) - expect) > tol) {
      why << "positive-edge dichotomy at " << k.first << "-" << k.second << "; ";
    }
  }
  double before = 0.0, after = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      before += pg.w(u, v) * sol.x(u, v);
      after += pg.w(u, v) * ts.x(u, v);
    }
  }
  if (after > before + tol) why << "length increased " << before << " -> " << after << "; ";
  return why.str();
}

}  // namespace pcrpp
