#include "pcrpp/instance.hpp"

#include <fstream>
#include <iomanip>
#include <queue>
#include <set>
#include <sstream>

namespace pcrpp {
namespace {

std::uint64_t pair_code(int u, int v) {
  EdgeKey k = make_key(u, v);
  return (static_cast<std::uint64_t>(k.first) << 32) |
         static_cast<std::uint32_t>(k.second);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

int Instance::edge_index(int u, int v) const {
  auto it = index_.find(pair_code(u, v));
  return it == index_.end() ? -1 : it->second;
}

double Instance::total_profit() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.p;
  return s;
}

void Instance::build_index() {
  incident_.assign(vertex_count_, {});
  index_.clear();
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
    index_[pair_code(e.u, e.v)] = i;
  }
}

Instance make_instance(int vertex_count, int root, std::vector<Edge> edges,
                       std::optional<double> opt_max) {
  if (vertex_count <= 0) throw Error("malformed header: vertex count must be positive");
  if (root < 0 || root >= vertex_count) throw Error("root out of range");
  std::set<EdgeKey> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw Error("edge endpoint out of range");
    }
    if (e.u == e.v) throw Error("loop edge");
    if (!std::isfinite(e.w) || !std::isfinite(e.p)) throw Error("non-finite value");
    if (e.w < 0) throw Error("negative length");
    if (e.p < 0) throw Error("negative profit");
    if (!seen.insert(make_key(e.u, e.v)).second) throw Error("duplicate edge");
  }

  std::vector<std::vector<int>> adj(vertex_count);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> reach(vertex_count, false);
  std::queue<int> q;
  q.push(root);
  reach[root] = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!reach[v]) {
        reach[v] = true;
        q.push(v);
      }
    }
  }
  std::vector<int> remap(vertex_count, -1);
  Instance inst;
  for (int v = 0; v < vertex_count; ++v) {
    if (reach[v]) {
      remap[v] = static_cast<int>(inst.labels_.size());
      inst.labels_.push_back(v + 1);
    }
  }
  inst.vertex_count_ = static_cast<int>(inst.labels_.size());
  inst.root_ = remap[root];
  for (const Edge& e : edges) {
    if (reach[e.u]) {
      inst.edges_.push_back({remap[e.u], remap[e.v], e.w, e.p});
    } else {
      inst.detached_profit_ += e.p;
    }
  }
  inst.opt_max_ = opt_max;
  inst.build_index();
  return inst;
}

Instance parse_instance(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0, r = 0;
  std::vector<Edge> edges;
  std::optional<double> opt_max;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    if (t.rfind("OPTMAX", 0) == 0) {
      std::string tag;
      double value;
      if (!(ls >> tag >> value) || tag != "OPTMAX") {
        throw Error("malformed OPTMAX line " + std::to_string(line_no));
      }
      opt_max = value;
      continue;
    }
    if (!have_header) {
      std::string extra;
      if (!(ls >> n >> m >> r) || (ls >> extra) || n <= 0 || m < 0) {
        throw Error("malformed header");
      }
      if (r < 1 || r > n) throw Error("root out of range");
      have_header = true;
      continue;
    }
    long long u, v;
    double w, p;
    std::string extra;
    if (!(ls >> u >> v >> w >> p) || (ls >> extra)) {
      throw Error("malformed edge line " + std::to_string(line_no));
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error("edge endpoint out of range on line " + std::to_string(line_no));
    }
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), w, p});
  }
  if (!have_header) throw Error("malformed header");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error("edge count does not match header");
  }
  return make_instance(static_cast<int>(n), static_cast<int>(r - 1),
                       std::move(edges), opt_max);
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << inst.vertex_count() << ' ' << inst.edge_count() << ' '
      << inst.root() + 1 << '\n';
  for (const Edge& e : inst.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << ' ' << e.p << '\n';
  }
  if (inst.opt_max()) out << "OPTMAX " << *inst.opt_max() << '\n';
  return out.str();
}

Walk trivial_walk(const Instance& inst) { return Walk{{inst.root()}}; }

std::vector<int> traversal_counts(const Instance& inst, const Walk& walk) {
  if (walk.vertices.empty() || walk.vertices.front() != inst.root() ||
      walk.vertices.back() != inst.root()) {
    throw Error("walk is not closed at the root");
  }
  std::vector<int> count(inst.edge_count(), 0);
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    const int e = inst.edge_index(walk.vertices[i - 1], walk.vertices[i]);
    if (e < 0) throw Error("walk uses a nonexistent edge");
    ++count[e];
  }
  return count;
}

double objective(const Instance& inst, const Walk& walk) {
  const std::vector<int> count = traversal_counts(inst, walk);
  double value = 0.0;
  for (int i = 0; i < inst.edge_count(); ++i) {
    const Edge& e = inst.edges()[i];
    value += count[i] > 0 ? count[i] * e.w : e.p;
  }
  return value;
}

}  // namespace pcrpp
