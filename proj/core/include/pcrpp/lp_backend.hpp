#ifndef PCRPP_LP_BACKEND_HPP_
#define PCRPP_LP_BACKEND_HPP_

#include <string>
#include <utility>
#include <vector>

#include "pcrpp/common.hpp"

namespace pcrpp::lp {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct Row {
  std::vector<std::pair<int, double>> coefs;  // (column, coefficient)
  RowSense sense = RowSense::kEqual;
  double rhs = 0.0;
  std::string name;
};

// min offset + c·x  s.t. rows, 0 <= x <= upper.
struct Model {
  std::vector<double> cost;
  std::vector<double> upper;  // kInf when unbounded above
  std::vector<std::string> col_names;
  std::vector<Row> rows;
  double offset = 0.0;

  int add_column(std::string name, double c, double ub = kInf) {
    cost.push_back(c);
    upper.push_back(ub);
    col_names.push_back(std::move(name));
    return static_cast<int>(cost.size()) - 1;
  }
  int add_row(Row row) {
    rows.push_back(std::move(row));
    return static_cast<int>(rows.size()) - 1;
  }
  int num_cols() const { return static_cast<int>(cost.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* status_name(Status s);

struct Result {
  Status status = Status::kInfeasible;
  std::vector<double> x;
  // One multiplier per model row; c_j - Σ_i duals_i a_ij >= 0 for columns at
  // their lower bound at optimality.
  std::vector<double> duals;
  double objective = 0.0;
  long iterations = 0;
};

// Any optimal basic primal-dual solver can stand behind this interface.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual Result solve(const Model& model) = 0;
  virtual std::string name() const = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double cost_tol = 1e-9;
  double feasibility_tol = 1e-9;
  long max_iterations = 0;  // 0: scale with model size
  int degenerate_streak = 50;  // switch to Bland's rule after this many
};

// Two-phase dense tableau simplex. Finite upper bounds become explicit rows.
class DenseSimplex : public Backend {
 public:
  explicit DenseSimplex(SimplexOptions options = {}) : options_(options) {}
  Result solve(const Model& model) override;
  std::string name() const override { return "dense-simplex"; }

 private:
  SimplexOptions options_;
};

// CPLEX LP text format.
std::string to_lp_format(const Model& model);

}  // namespace pcrpp::lp

#endif  // PCRPP_LP_BACKEND_HPP_
