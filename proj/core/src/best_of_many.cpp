#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "pcrpp/solvers.hpp"
#include "pcrpp/treedecomp.hpp"

namespace pcrpp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Job {
  RootedTree core;
  Provenance provenance;
};

bool better(const Candidate& c, const Candidate& best) {
  if (c.value < best.value - kEqualTol) return true;
  if (c.value > best.value + kEqualTol) return false;
  return c.walk.length() < best.walk.length();
}

void dump_distribution(std::ostream& out, double delta, const TreeDistribution& dist) {
  out << "threshold " << delta << " trees " << dist.size() << '\n';
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out << "  weight " << dist.weights[i] << " edges";
    for (const EdgeKey& k : dist.trees[i].edges) out << ' ' << k.first << '-' << k.second;
    out << '\n';
  }
}

}  // namespace

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Solution best_of_many(const Instance& inst, const SolverConfig& config) {
  const auto start = Clock::now();
  Solution out;
  const PreprocessedGraph pg = preprocess(inst);
  const int r = pg.root();

  auto t = Clock::now();
  LpConfig lp_config = config.lp;
  if (config.lp_dump) lp_config.keep_final_model = true;
  const LpResult lp = solve_pcrpp_lp(pg, lp_config);
  out.stats.times.lp = seconds_since(t);
  out.stats.lp = lp.stats;
  if (config.lp_dump) *config.lp_dump << lp.final_model_lp;
  const LpSolution& sol = lp.solution;
  out.lower_bound = sol.objective;

  const CandidateBuilder builder(inst, pg);
  Candidate best = builder.trivial();
  out.stats.candidates = 1;

  std::vector<double> thresholds;
  for (int v = 0; v < pg.vertex_count(); ++v) {
    if (v != r) thresholds.push_back(sol.y[v]);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::unique_ptr<SharedTrace> shared;
  if (config.shared_trace) {
    t = Clock::now();
    shared = std::make_unique<SharedTrace>(sol, pg, config.split);
    out.stats.times.split += seconds_since(t);
  }

  std::vector<Job> jobs;
  std::set<RootedTree> seen{RootedTree{}};
  int last_split_count = -1;
  for (double delta : thresholds) {
    const int split_count = static_cast<int>(split_order(sol.y, r, delta).size());
    if (split_count == last_split_count) continue;
    last_split_count = split_count;
    ++out.stats.thresholds;

    t = Clock::now();
    TreeDistribution dist;
    SymMatrix xt;
    if (shared) {
      dist = shared->distribution(delta);
      xt = sol.x;
    } else {
      const ThresholdSplit ts = apply_threshold_split(sol, delta, pg, config.split);
      dist = edge_profit_decomposition(ts.x, ts.y, pg, config.split);
      xt = ts.x;
    }
    out.stats.times.split += seconds_since(t);
    out.stats.trees += static_cast<int>(dist.size());
    if (config.distribution_dump) dump_distribution(*config.distribution_dump, delta, dist);

    for (int i = 0; i < static_cast<int>(dist.size()); ++i) {
      const RootedTree& tree = dist.trees[i];
      std::vector<double> gammas;
      for (const EdgeKey& k : tree.edges) {
        if (pg.is_positive(k.first, k.second)) gammas.push_back(xt(k.first, k.second));
      }
      std::sort(gammas.begin(), gammas.end());
      gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
      for (double gamma : gammas) {
        RootedTree core = edge_profit_core(tree, pg, xt, gamma);
        if (seen.insert(core).second) {
          jobs.push_back({std::move(core), Provenance{false, delta, i, gamma}});
        }
      }
    }
  }

  std::vector<Candidate> built(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), config.threads, [&](int i) {
    built[i] = builder.build(jobs[i].core, jobs[i].provenance);
  });
  out.stats.candidates += static_cast<int>(built.size());
  for (Candidate& c : built) {
    if (better(c, best)) best = std::move(c);
  }

  out.walk = std::move(best.walk);
  out.value = best.value;
  out.stats.best = best.provenance;
  out.stats.times.other =
      std::max(0.0, seconds_since(start) - out.stats.times.lp - out.stats.times.split);
  if (config.check_ratio && out.value > 1.6 * sol.objective + 1e-6) {
    std::ostringstream msg;
    msg << "best-of-many value " << out.value << " exceeds 1.6 * " << sol.objective;
    throw InternalError(msg.str());
  }
  return out;
}

}  // namespace pcrpp
