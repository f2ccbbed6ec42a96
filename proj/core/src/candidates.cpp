#include "pcrpp/candidates.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pcrpp {

RootedTree edge_profit_core(const RootedTree& tree, const PreprocessedGraph& pg,
                            const SymMatrix& x, double gamma) {
  const int r = pg.root();
  std::map<int, std::vector<int>> adj;
  for (const EdgeKey& k : tree.edges) {
    adj[k.first].push_back(k.second);
    adj[k.second].push_back(k.first);
  }
  std::map<int, int> parent;
  std::vector<int> stack{r};
  parent[r] = -1;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (int b : adj[a]) {
      if (!parent.count(b)) {
        parent[b] = a;
        stack.push_back(b);
      }
    }
  }
  std::vector<EdgeKey> keep;
  std::map<int, bool> marked;
  for (const EdgeKey& k : tree.edges) {
    if (!pg.is_positive(k.first, k.second) || x(k.first, k.second) < gamma) continue;
    for (int end : {k.first, k.second}) {
      for (int v = end; v != r && !marked[v]; v = parent.at(v)) {
        marked[v] = true;
        keep.push_back(make_key(v, parent.at(v)));
      }
    }
  }
  RootedTree core;
  core.edges = std::move(keep);
  std::sort(core.edges.begin(), core.edges.end());
  return core;
}

CandidateBuilder::CandidateBuilder(const Instance& inst, const PreprocessedGraph& pg)
    : inst_(&inst), pg_(&pg), paths_(length_graph(inst)) {}

Candidate CandidateBuilder::trivial() const {
  Candidate c;
  c.walk = trivial_walk(*inst_);
  c.value = objective(*inst_, c.walk);
  return c;
}

Candidate CandidateBuilder::build(const RootedTree& core,
                                  const Provenance& provenance) const {
  Candidate c;
  c.provenance = provenance;
  Multigraph h = restore(*pg_, *inst_, core.edges);
  const double core_len = tree_length(core, *pg_);
  const double h_len = multigraph_length(*inst_, h);
  if (h_len > core_len + kEqualTol * (1.0 + core_len)) {
    std::ostringstream msg;
    msg << "restored core is longer than the core: " << h_len << " > " << core_len;
    throw InternalError(msg.str());
  }
  if (h.empty()) {
    c.walk = trivial_walk(*inst_);
  } else {
    if (!support_connected(h, inst_->root()) || h.degree(inst_->root()) == 0) {
      throw InternalError("restored core is disconnected from the root");
    }
    h.merge(min_tjoin(paths_, odd_vertices(h)));
    c.walk = euler_tour(h, inst_->root());
  }
  c.value = objective(*inst_, c.walk);
  return c;
}

Candidate build_candidate(const Instance& inst, const PreprocessedGraph& pg,
                          const RootedTree& core, const Provenance& provenance) {
  return CandidateBuilder(inst, pg).build(core, provenance);
}

}  // namespace pcrpp
