#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pcrpp/bench.hpp"

namespace pcrpp {

Instance gen_random(std::uint64_t seed, const RandomSpec& spec) {
  const int n = spec.n;
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || spec.m < n - 1 || spec.m > max_edges) {
    throw Error("gen_random: no simple connected graph with these sizes");
  }
  if (spec.wmax < 1 || spec.pmax < 1 || spec.positive_density < 0 ||
      spec.positive_density > 1) {
    throw Error("gen_random: bad weight or profit range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, spec.wmax);
  std::uniform_int_distribution<int> profit(1, spec.pmax);
  std::bernoulli_distribution positive(spec.positive_density);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<EdgeKey> used;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    used.insert(make_key(perm[i], perm[pick(rng)]));
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (static_cast<int>(used.size()) < spec.m) {
    const int a = vertex(rng), b = vertex(rng);
    if (a != b) used.insert(make_key(a, b));
  }
  std::vector<Edge> edges;
  for (const EdgeKey& k : used) {
    Edge e{k.first, k.second, static_cast<double>(length(rng)), 0.0};
    if (positive(rng)) e.p = profit(rng);
    edges.push_back(e);
  }
  return make_instance(n, 0, std::move(edges));
}

}  // namespace pcrpp
