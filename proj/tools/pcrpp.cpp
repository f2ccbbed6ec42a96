// pcrpp: solve, compare and benchmark prize-collecting rural postman instances.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcrpp/bench.hpp"
#include "pcrpp/ratiocheck.hpp"
#include "pcrpp/solvers.hpp"

namespace {

struct Tolerances {
  double feasibility = 1e-7;
  double pricing = 1e-7;
  double snap = 1e-6;
  int max_rounds = 10000;
  double zero_degree = 1e-7;
  double min_eps = 1e-10;
};

void add_tolerance_flags(CLI::App* app, Tolerances& t) {
  app->add_option("--feas-tol", t.feasibility, "Cut violation tolerance")->capture_default_str();
  app->add_option("--pricing-tol", t.pricing, "Reduced-cost tolerance")->capture_default_str();
  app->add_option("--snap-tol", t.snap, "Snap LP values within this of 0 or 1")
      ->capture_default_str();
  app->add_option("--max-rounds", t.max_rounds, "Cutting-plane round cap")->capture_default_str();
  app->add_option("--zero-degree-tol", t.zero_degree, "Degree treated as zero when splitting")
      ->capture_default_str();
  app->add_option("--min-eps", t.min_eps, "Smallest splitting amount accepted")
      ->capture_default_str();
}

pcrpp::SolverConfig solver_config(const Tolerances& t, int threads, bool per_delta) {
  pcrpp::SolverConfig cfg;
  cfg.lp.feasibility_tol = t.feasibility;
  cfg.lp.pricing_tol = t.pricing;
  cfg.lp.snap_tol = t.snap;
  cfg.lp.max_rounds = t.max_rounds;
  cfg.split.zero_degree_tol = t.zero_degree;
  cfg.split.min_eps = t.min_eps;
  cfg.threads = threads;
  cfg.shared_trace = !per_delta;
  return cfg;
}

void print_walk(const pcrpp::Instance& inst, const pcrpp::Walk& walk) {
  std::cout << "walk";
  for (int v : walk.vertices) std::cout << ' ' << inst.label(v);
  std::cout << '\n';
}

void print_value(const pcrpp::Instance& inst, double value) {
  std::cout << std::setprecision(10) << "value " << value + inst.detached_profit() << '\n';
  if (inst.detached_profit() > 0) {
    std::cout << "detached_profit " << inst.detached_profit() << '\n';
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw pcrpp::Error("cannot write " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prize-collecting rural postman solver"};
  app.require_subcommand(1);

  Tolerances tol;
  int threads = 1;
  int oracle_cap = 12;
  int pctsp_cap = 12;

  // solve
  std::string solve_file, lp_dump, dist_dump;
  bool per_delta = false;
  bool no_ratio_check = false;
  auto* solve = app.add_subcommand("solve", "Run the best-of-many LP rounding algorithm");
  solve->add_option("instance", solve_file, "Instance file")->required()->check(CLI::ExistingFile);
  add_tolerance_flags(solve, tol);
  solve->add_option("--threads", threads, "Worker threads")->capture_default_str();
  solve->add_flag("--per-delta", per_delta, "Split afresh for every threshold");
  solve->add_flag("--no-ratio-check", no_ratio_check, "Skip the 1.6 OPT_LP assertion");
  solve->add_option("--dump-lp", lp_dump, "Write the final LP model to this file");
  solve->add_option("--dump-trees", dist_dump, "Write the tree distributions to this file");

  // oracle
  std::string oracle_file;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
  oracle->add_option("instance", oracle_file, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--edge-cap", oracle_cap, "Largest edge count accepted")
      ->capture_default_str();

  // reduce
  std::string reduce_file;
  auto* reduce = app.add_subcommand("reduce", "PCTSP-reduction baseline");
  reduce->add_option("instance", reduce_file, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_option("--pctsp-cap", pctsp_cap, "Largest exact PCTSP size")->capture_default_str();

  // bench
  std::vector<std::string> bench_files;
  std::string csv_path, summary_path;
  auto* bench = app.add_subcommand("bench", "Benchmark both algorithms over instance files");
  bench->add_option("instances", bench_files, "Instance files");
  bench->add_option("--csv", csv_path, "CSV output path (stdout when omitted)");
  bench->add_option("--summary", summary_path, "Family summary path (stderr when omitted)");
  add_tolerance_flags(bench, tol);
  bench->add_option("--threads", threads, "Instances solved concurrently")->capture_default_str();
  bench->add_option("--edge-cap", oracle_cap, "Oracle edge cap")->capture_default_str();
  bench->add_option("--pctsp-cap", pctsp_cap, "Largest exact PCTSP size")->capture_default_str();
  bench->add_flag("--per-delta", per_delta, "Split afresh for every threshold");

  // verify-ratio
  double step = 1e-8;
  pcrpp::RatioParams params = pcrpp::paper_params();
  double k0 = static_cast<double>(params.kappa0);
  double k1 = static_cast<double>(params.kappa);
  double beta = static_cast<double>(params.beta);
  auto* verify = app.add_subcommand("verify-ratio", "Certify the constant below 1.6 on a grid");
  verify->add_option("--step", step, "Grid step")->capture_default_str();
  verify->add_option("--kappa0", k0)->capture_default_str();
  verify->add_option("--kappa", k1)->capture_default_str();
  verify->add_option("--beta", beta)->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads")->capture_default_str();

  // gen-random
  std::uint64_t seed = 1;
  pcrpp::RandomSpec spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-random", "Write a random connected instance");
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("-n,--vertices", spec.n)->capture_default_str();
  gen->add_option("-m,--edges", spec.m)->capture_default_str();
  gen->add_option("--wmax", spec.wmax)->capture_default_str();
  gen->add_option("--pmax", spec.pmax)->capture_default_str();
  gen->add_option("--density", spec.positive_density, "Fraction of profitable edges")
      ->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const pcrpp::Instance inst = pcrpp::load_instance(solve_file);
      pcrpp::SolverConfig cfg = solver_config(tol, threads, per_delta);
      cfg.check_ratio = !no_ratio_check;
      std::ofstream lp_out, dist_out;
      if (!lp_dump.empty()) {
        lp_out = open_out(lp_dump);
        cfg.lp_dump = &lp_out;
      }
      if (!dist_dump.empty()) {
        dist_out = open_out(dist_dump);
        cfg.distribution_dump = &dist_out;
      }
      const pcrpp::Solution sol = pcrpp::best_of_many(inst, cfg);
      print_value(inst, sol.value);
      std::cout << "lp_bound " << *sol.lower_bound + inst.detached_profit() << '\n';
      print_walk(inst, sol.walk);
      const auto& s = sol.stats;
      std::cout << "candidates " << s.candidates << "\nthresholds " << s.thresholds
                << "\ntrees " << s.trees << "\nlp_rounds " << s.lp.rounds << "\ncuts "
                << s.lp.cuts_added << "\ntime_lp " << s.times.lp << "\ntime_split "
                << s.times.split << "\ntime_other " << s.times.other << '\n';
      if (s.best.trivial) {
        std::cout << "best trivial\n";
      } else {
        std::cout << "best delta=" << s.best.delta << " tree=" << s.best.tree_index
                  << " gamma=" << s.best.gamma << '\n';
      }
    } else if (*oracle) {
      const pcrpp::Instance inst = pcrpp::load_instance(oracle_file);
      const pcrpp::Solution sol = pcrpp::exact_oracle(inst, {oracle_cap});
      print_value(inst, sol.value);
      print_walk(inst, sol.walk);
    } else if (*reduce) {
      const pcrpp::Instance inst = pcrpp::load_instance(reduce_file);
      pcrpp::ReductionConfig cfg;
      cfg.exact_cap = pctsp_cap;
      const pcrpp::Solution sol = pcrpp::pctsp_reduction(inst, cfg);
      print_value(inst, sol.value);
      print_walk(inst, sol.walk);
      std::cout << "exact_pctsp " << (sol.stats.exact ? 1 : 0) << '\n';
    } else if (*bench) {
      pcrpp::BenchConfig cfg;
      cfg.solver = solver_config(tol, 1, per_delta);
      cfg.reduction.exact_cap = pctsp_cap;
      cfg.oracle.edge_cap = oracle_cap;
      cfg.threads = threads;
      const auto records = pcrpp::run_bench(bench_files, cfg);
      if (csv_path.empty()) {
        pcrpp::write_csv(std::cout, records);
      } else {
        std::ofstream out = open_out(csv_path);
        pcrpp::write_csv(out, records);
      }
      const auto summary = pcrpp::summarize(records);
      if (summary_path.empty()) {
        pcrpp::write_summary(std::cerr, summary);
      } else {
        std::ofstream out = open_out(summary_path);
        pcrpp::write_summary(out, summary);
      }
      bool failed = false;
      for (const auto& r : records) {
        if (!r.ok()) {
          std::cerr << r.name << ": " << r.status << '\n';
          failed = true;
        }
      }
      return failed ? 2 : 0;
    } else if (*verify) {
      const pcrpp::RatioParams p{k0, k1, beta};
      const auto start = std::chrono::steady_clock::now();
      const pcrpp::RatioCertificate cert = pcrpp::verify_bound(p, step, threads);
      pcrpp::AlphaComponents a;
      a.g = pcrpp::g(p);
      a.invgap = 1 / (1 - p.kappa0);
      a.max_f = cert.grid_max;
      a.argmax = cert.argmax;
      std::cout << pcrpp::format_certificate(p, cert, a);
      std::cout << "seconds="
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                << '\n';
    } else if (*gen) {
      const pcrpp::Instance inst = pcrpp::gen_random(seed, spec);
      if (gen_out.empty()) {
        std::cout << pcrpp::serialize_instance(inst);
      } else {
        std::ofstream out = open_out(gen_out);
        out << pcrpp::serialize_instance(inst);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
