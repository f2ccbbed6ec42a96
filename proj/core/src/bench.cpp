#include "pcrpp/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <sstream>

namespace pcrpp {
namespace {

const char* kHeader =
    "name,|V|,|E|,OPT,ALG,RED,OPT_LP,ALG gap,RED gap,LP gap,time_lp,time_split,"
    "time_other,better,status";

std::string fixed6(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;  // no "-0.000000"
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

std::string fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : std::string(); }

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

double convert_optimum(const Instance& inst, double opt_max) {
  return inst.total_profit() + inst.detached_profit() - opt_max;
}

std::optional<double> gap_percent(double value, double opt) {
  if (opt == 0.0) return std::nullopt;
  return 100.0 * (value - opt) / opt;
}

BenchRecord bench_instance(const std::string& name, const Instance& inst,
                           const BenchConfig& config) {
  BenchRecord rec;
  rec.name = name;
  rec.vertices = inst.vertex_count();
  rec.edges = inst.edge_count();
  const double detached = inst.detached_profit();

  const Solution alg = best_of_many(inst, config.solver);
  rec.alg = alg.value + detached;
  rec.opt_lp = alg.lower_bound.value_or(0.0) + detached;
  rec.time_lp = alg.stats.times.lp;
  rec.time_split = alg.stats.times.split;
  rec.time_other = alg.stats.times.other;

  const Solution red = pctsp_reduction(inst, config.reduction);
  rec.red = red.value + detached;

  if (inst.opt_max()) {
    rec.opt = convert_optimum(inst, *inst.opt_max());
  } else if (inst.edge_count() <= config.oracle.edge_cap) {
    rec.opt = exact_oracle(inst, config.oracle).value + detached;
  }
  if (rec.opt) {
    rec.alg_gap = gap_percent(rec.alg, *rec.opt);
    rec.red_gap = gap_percent(rec.red, *rec.opt);
    if (*rec.opt != 0.0) rec.lp_gap = 100.0 * (*rec.opt - rec.opt_lp) / *rec.opt;
  }
  if (rec.alg < rec.red - kEqualTol) {
    rec.better = "ALG";
  } else if (rec.red < rec.alg - kEqualTol) {
    rec.better = "RED";
  } else {
    rec.better = "tie";
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<std::string>& files,
                                   const BenchConfig& config) {
  std::vector<BenchRecord> records(files.size());
  BenchConfig inner = config;
  if (config.threads > 1) inner.solver.threads = 1;
  parallel_for(static_cast<int>(files.size()), config.threads, [&](int i) {
    const std::string name = std::filesystem::path(files[i]).stem().string();
    try {
      records[i] = bench_instance(name, load_instance(files[i]), inner);
    } catch (const std::exception& e) {
      records[i] = BenchRecord{};
      records[i].name = name;
      records[i].status = sanitize(std::string("error: ") + e.what());
    }
  });
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kHeader << '\n';
  for (const BenchRecord& r : records) {
    out << sanitize(r.name) << ',' << r.vertices << ',' << r.edges << ',' << fixed6(r.opt)
        << ',' << fixed6(r.alg) << ',' << fixed6(r.red) << ',' << fixed6(r.opt_lp) << ','
        << fixed6(r.alg_gap) << ',' << fixed6(r.red_gap) << ',' << fixed6(r.lp_gap) << ','
        << fixed6(r.time_lp) << ',' << fixed6(r.time_split) << ',' << fixed6(r.time_other)
        << ',' << r.better << ',' << r.status << '\n';
  }
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw Error("bad CSV header");
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 15) throw Error("bad CSV row: " + line);
    BenchRecord r;
    r.name = f[0];
    r.vertices = std::stoi(f[1]);
    r.edges = std::stoi(f[2]);
    r.opt = parse_optional(f[3]);
    r.alg = std::stod(f[4]);
    r.red = std::stod(f[5]);
    r.opt_lp = std::stod(f[6]);
    r.alg_gap = parse_optional(f[7]);
    r.red_gap = parse_optional(f[8]);
    r.lp_gap = parse_optional(f[9]);
    r.time_lp = std::stod(f[10]);
    r.time_split = std::stod(f[11]);
    r.time_other = std::stod(f[12]);
    r.better = f[13];
    r.status = f[14];
    records.push_back(std::move(r));
  }
  return records;
}

std::string family_of(const std::string& name) {
  std::size_t k = 0;
  while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
  return k == 0 ? "other" : name.substr(0, k);
}

std::vector<FamilySummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const BenchRecord*>> groups;
  for (const BenchRecord& r : records) {
    if (!r.ok()) continue;
    const std::string fam = family_of(r.name);
    if (!groups.count(fam)) order.push_back(fam);
    groups[fam].push_back(&r);
    groups["all"].push_back(&r);
  }
  if (!records.empty() && groups.count("all")) order.push_back("all");

  std::vector<FamilySummary> out;
  for (const std::string& fam : order) {
    const auto& rows = groups[fam];
    FamilySummary s;
    s.family = fam;
    s.count = static_cast<int>(rows.size());
    int alg_n = 0, red_n = 0, lp_n = 0;
    for (const BenchRecord* r : rows) {
      if (r->opt) ++s.with_opt;
      if (r->alg_gap) {
        s.avg_alg_gap += *r->alg_gap;
        s.max_alg_gap = alg_n == 0 ? *r->alg_gap : std::max(s.max_alg_gap, *r->alg_gap);
        ++alg_n;
      }
      if (r->red_gap) {
        s.avg_red_gap += *r->red_gap;
        s.max_red_gap = red_n == 0 ? *r->red_gap : std::max(s.max_red_gap, *r->red_gap);
        ++red_n;
      }
      if (r->lp_gap) {
        s.avg_lp_gap += *r->lp_gap;
        s.max_lp_gap = lp_n == 0 ? *r->lp_gap : std::max(s.max_lp_gap, *r->lp_gap);
        ++lp_n;
      }
      s.avg_time_lp += r->time_lp;
      s.avg_time_split += r->time_split;
      s.avg_time_other += r->time_other;
      if (r->better == "ALG") ++s.alg_better;
      else if (r->better == "RED") ++s.red_better;
      else ++s.ties;
    }
    if (alg_n) s.avg_alg_gap /= alg_n;
    if (red_n) s.avg_red_gap /= red_n;
    if (lp_n) s.avg_lp_gap /= lp_n;
    if (s.count) {
      s.avg_time_lp /= s.count;
      s.avg_time_split /= s.count;
      s.avg_time_other /= s.count;
    }
    out.push_back(s);
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<FamilySummary>& summary) {
  auto pct = [](double v) { return std::fabs(v) < 5e-3 ? 0.0 : v; };
  out << std::left << std::setw(10) << "family" << std::right << std::setw(6) << "n"
      << std::setw(12) << "avg ALG%" << std::setw(12) << "max ALG%" << std::setw(12)
      << "avg RED%" << std::setw(12) << "max RED%" << std::setw(12) << "avg LP%"
      << std::setw(12) << "max LP%" << std::setw(11) << "t_lp" << std::setw(11) << "t_split"
      << std::setw(11) << "t_other" << std::setw(6) << "ALG" << std::setw(6) << "RED"
      << std::setw(6) << "tie" << '\n';
  out << std::fixed << std::setprecision(2);
  for (const FamilySummary& s : summary) {
    out << std::left << std::setw(10) << s.family << std::right << std::setw(6) << s.count
        << std::setw(12) << pct(s.avg_alg_gap) << std::setw(12) << pct(s.max_alg_gap)
        << std::setw(12) << pct(s.avg_red_gap) << std::setw(12) << pct(s.max_red_gap)
        << std::setw(12) << pct(s.avg_lp_gap) << std::setw(12) << pct(s.max_lp_gap)
        << std::setprecision(4) << std::setw(11)
        << s.avg_time_lp << std::setw(11) << s.avg_time_split << std::setw(11)
        << s.avg_time_other << std::setprecision(2) << std::setw(6) << s.alg_better
        << std::setw(6) << s.red_better << std::setw(6) << s.ties << '\n';
  }
  out << std::defaultfloat;
}

}  // namespace pcrpp
