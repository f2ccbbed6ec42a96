#include "pcrpp/pcrpp_lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pcrpp/maxflow.hpp"

namespace pcrpp {

double lp_objective(const PreprocessedGraph& pg, const SymMatrix& x) {
  double value = 0.0;
  const int n = pg.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      value += pg.w(u, v) * x(u, v);
      if (pg.is_positive(u, v)) value += pg.p(u, v) * (1.0 - x(u, v));
    }
  }
  return value;
}

std::vector<CutRecord> separate_cuts(const PreprocessedGraph& pg, const SymMatrix& x,
                                     const std::vector<double>& y, double tol) {
  const int n = pg.vertex_count();
  const int r = pg.root();
  const WeightedGraph cap = support_graph(x);
  std::vector<CutRecord> out;
  std::set<std::pair<std::vector<int>, int>> seen;
  for (int v = 0; v < n; ++v) {
    if (v == r || y[v] <= tol) continue;
    const MinCut mc = max_flow_min_cut(cap, v, r);
    if (mc.value >= 2.0 * y[v] - tol) continue;
    CutRecord rec;
    int witness = v;
    for (int u = 0; u < n; ++u) {
      if (!mc.source_side[u]) continue;
      rec.set.push_back(u);
      if (y[u] > y[witness]) witness = u;
    }
    if (!seen.insert({rec.set, witness}).second) continue;
    rec.witness = witness;
    rec.slack = cut_value(x, mc.source_side) - 2.0 * y[witness];
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

struct ModelState {
  std::vector<EdgeKey> columns;  // active x variables
  std::vector<int> y_col;        // vertex -> y column or -1
  std::vector<CutRecord> cuts;
};

lp::Model build_model(const PreprocessedGraph& pg, const ModelState& st,
                      std::vector<int>* deg_row, int* root_row, int* first_cut_row) {
  const int n = pg.vertex_count();
  const int r = pg.root();
  lp::Model model;
  model.offset = pg.total_positive_profit();
  for (const EdgeKey& k : st.columns) {
    const bool pos = pg.is_positive(k.first, k.second);
    const double c = pg.w(k.first, k.second) - (pos ? pg.p(k.first, k.second) : 0.0);
    model.add_column("x_" + std::to_string(k.first) + "_" + std::to_string(k.second), c,
                     pos ? 1.0 : kInf);
  }
  for (int v = 0; v < n; ++v) {
    if (st.y_col[v] >= 0) model.add_column("y_" + std::to_string(v), 0.0, 1.0);
  }
  std::vector<lp::Row> deg(n);
  for (int c = 0; c < static_cast<int>(st.columns.size()); ++c) {
    deg[st.columns[c].first].coefs.push_back({c, 1.0});
    deg[st.columns[c].second].coefs.push_back({c, 1.0});
  }
  deg_row->assign(n, -1);
  for (int v = 0; v < n; ++v) {
    lp::Row row = std::move(deg[v]);
    if (v == r) {
      row.sense = lp::RowSense::kLessEqual;
      row.rhs = 2.0;
      row.name = "root_degree";
      *root_row = model.add_row(std::move(row));
    } else {
      row.coefs.push_back({st.y_col[v], -2.0});
      row.sense = lp::RowSense::kEqual;
      row.rhs = 0.0;
      row.name = "degree_" + std::to_string(v);
      (*deg_row)[v] = model.add_row(std::move(row));
    }
  }
  for (int c = 0; c < static_cast<int>(st.columns.size()); ++c) {
    const EdgeKey& k = st.columns[c];
    if (!pg.is_positive(k.first, k.second)) continue;
    for (int end : {k.first, k.second}) {
      model.add_row({{{st.y_col[end], 1.0}, {c, -1.0}},
                     lp::RowSense::kEqual,
                     0.0,
                     "couple_" + std::to_string(end)});
    }
  }
  *first_cut_row = model.num_rows();
  for (std::size_t i = 0; i < st.cuts.size(); ++i) {
    const CutRecord& cut = st.cuts[i];
    std::vector<bool> in(n, false);
    for (int v : cut.set) in[v] = true;
    lp::Row row;
    for (int c = 0; c < static_cast<int>(st.columns.size()); ++c) {
      if (in[st.columns[c].first] != in[st.columns[c].second]) row.coefs.push_back({c, 1.0});
    }
    row.coefs.push_back({st.y_col[cut.witness], -2.0});
    row.sense = lp::RowSense::kGreaterEqual;
    row.rhs = 0.0;
    row.name = "cut_" + std::to_string(i);
    model.add_row(std::move(row));
  }
  return model;
}

double snap(double v, double tol) {
  if (std::fabs(v) <= tol) return 0.0;
  if (std::fabs(v - 1.0) <= tol) return 1.0;
  return v;
}

}  // namespace

LpResult solve_pcrpp_lp(const PreprocessedGraph& pg, const LpConfig& config) {
  const int n = pg.vertex_count();
  const int r = pg.root();
  std::shared_ptr<lp::Backend> backend = config.backend;
  if (!backend) backend = std::make_shared<lp::DenseSimplex>();

  ModelState st;
  st.y_col.assign(n, -1);
  int next_y = 0;
  std::set<EdgeKey> active;
  for (const EdgeKey& k : pg.positive_edges()) active.insert(k);
  for (int v = 0; v < n; ++v) {
    if (v != r) active.insert(make_key(r, v));
  }
  for (const CopiedEdge& e : pg.copied().edges) {
    if (e.origin < 0) active.insert(make_key(e.u, e.v));
  }
  st.columns.assign(active.begin(), active.end());
  for (int v = 0; v < n; ++v) {
    if (v != r) st.y_col[v] = static_cast<int>(st.columns.size()) + next_y++;
  }

  LpResult out;
  std::set<std::pair<std::vector<int>, int>> cut_sets;
  while (true) {
    if (out.stats.rounds >= config.max_rounds) {
      throw Error("PCRPP-LP did not converge within the round limit");
    }
    ++out.stats.rounds;
    // y columns follow the x columns; refresh their indices.
    for (int v = 0, k = 0; v < n; ++v) {
      if (v != r) st.y_col[v] = static_cast<int>(st.columns.size()) + k++;
    }
    std::vector<int> deg_row;
    int root_row = -1, first_cut_row = 0;
    const lp::Model model = build_model(pg, st, &deg_row, &root_row, &first_cut_row);
    const lp::Result res = backend->solve(model);
    out.stats.simplex_iterations += res.iterations;
    if (res.status != lp::Status::kOptimal) {
      throw Error(std::string("LP backend failure: ") + lp::status_name(res.status));
    }
    SymMatrix x(n);
    for (int c = 0; c < static_cast<int>(st.columns.size()); ++c) {
      x.set(st.columns[c].first, st.columns[c].second, res.x[c]);
    }
    std::vector<double> y(n, 0.0);
    y[r] = 1.0;
    for (int v = 0; v < n; ++v) {
      if (v != r) y[v] = res.x[st.y_col[v]];
    }

    std::vector<CutRecord> cuts = separate_cuts(pg, x, y, config.feasibility_tol);
    int added = 0;
    for (CutRecord& c : cuts) {
      if (cut_sets.insert({c.set, c.witness}).second) {
        st.cuts.push_back(std::move(c));
        ++added;
      }
    }
    if (added > 0) {
      out.stats.cuts_added += added;
      continue;
    }

    // Reduced-cost pricing of the omitted zero-profit edges.
    std::vector<double> pi(n, 0.0);
    for (int v = 0; v < n; ++v) pi[v] = v == r ? res.duals[root_row] : res.duals[deg_row[v]];
    std::vector<std::vector<bool>> members;
    for (const CutRecord& c : st.cuts) {
      std::vector<bool> in(n, false);
      for (int v : c.set) in[v] = true;
      members.push_back(std::move(in));
    }
    std::vector<EdgeKey> priced;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (active.count({u, v})) continue;
        double rc = pg.w(u, v) - pi[u] - pi[v];
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (members[i][u] != members[i][v]) rc -= res.duals[first_cut_row + i];
        }
        if (rc < -config.pricing_tol) priced.push_back({u, v});
      }
    }
    if (!priced.empty()) {
      for (const EdgeKey& k : priced) {
        active.insert(k);
        st.columns.push_back(k);
      }
      out.stats.columns_priced += static_cast<int>(priced.size());
      continue;
    }

    out.solution.objective = res.objective;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) x.set(u, v, snap(x(u, v), config.snap_tol));
    }
    for (int v = 0; v < n; ++v) y[v] = snap(y[v], config.snap_tol);
    // Coupled values must compare equal against every threshold.
    for (const EdgeKey& k : pg.positive_edges()) {
      y[k.first] = y[k.second] = x(k.first, k.second);
    }
    out.solution.x = std::move(x);
    out.solution.y = std::move(y);
    out.cuts = st.cuts;
    if (config.keep_final_model) out.final_model_lp = lp::to_lp_format(model);
    return out;
  }
}

std::string check_lp_feasible(const PreprocessedGraph& pg, const SymMatrix& x,
                              const std::vector<double>& y, double tol) {
  std::ostringstream why;
  const int n = pg.vertex_count();
  const int r = pg.root();
  if (std::fabs(y[r] - 1.0) > tol) why << "y_r != 1; ";
  for (int v = 0; v < n; ++v) {
    if (y[v] < -tol || y[v] > 1.0 + tol) why << "y bound at " << v << "; ";
    const double d = x.degree(v);
    if (v == r) {
      if (d > 2.0 + tol) why << "root degree " << d << "; ";
    } else if (std::fabs(d - 2.0 * y[v]) > tol) {
      why << "degree at " << v << " is " << d << " vs " << 2 * y[v] << "; ";
    }
    for (int u = v + 1; u < n; ++u) {
      if (x(u, v) < -tol) why << "negative x; ";
      if (pg.is_positive(u, v)) {
        if (x(u, v) > 1.0 + tol) why << "x above 1 on positive edge; ";
        if (std::fabs(y[u] - x(u, v)) > tol || std::fabs(y[v] - x(u, v)) > tol) {
          why << "coupling at " << u << "-" << v << "; ";
        }
      }
    }
  }
  const WeightedGraph cap = support_graph(x);
  for (int v = 0; v < n; ++v) {
    if (v == r || y[v] <= tol) continue;
    const double c = max_flow_min_cut(cap, v, r).value;
    if (c < 2.0 * y[v] - tol) why << "cut at " << v << ": " << c << " < " << 2 * y[v] << "; ";
  }
  return why.str();
}

}  // namespace pcrpp
