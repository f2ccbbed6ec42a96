#include <algorithm>
#include <cmath>

#include "pcrpp/lp_backend.hpp"

namespace pcrpp::lp {

const char* status_name(Status s) {
  switch (s) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
    case Status::kIterationLimit:
      return "iteration limit";
  }
  return "unknown";
}

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), cols_(cols), stride_(cols + 1),
        t_(static_cast<std::size_t>(rows) * stride_, 0.0),
        d_(stride_, 0.0), basis_(rows, -1) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * stride_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * stride_ + j]; }
  double& rhs(int i) { return at(i, cols_); }
  double rhs(int i) const { return at(i, cols_); }

  void pivot(int r, int c) {
    double* pr = &t_[static_cast<std::size_t>(r) * stride_];
    const double inv = 1.0 / pr[c];
    for (int j = 0; j <= cols_; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    nz_.clear();
    for (int j = 0; j <= cols_; ++j) {
      if (pr[j] != 0.0) nz_.push_back(j);
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* pi = &t_[static_cast<std::size_t>(i) * stride_];
      const double f = pi[c];
      if (f == 0.0) continue;
      for (int j : nz_) pi[j] -= f * pr[j];
      pi[c] = 0.0;
    }
    const double f = d_[c];
    if (f != 0.0) {
      for (int j : nz_) d_[j] -= f * pr[j];
      d_[c] = 0.0;
    }
    basis_[r] = c;
  }

  void price(const std::vector<double>& cost) {
    for (int j = 0; j <= cols_; ++j) d_[j] = j < cols_ ? cost[j] : 0.0;
    for (int i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) d_[j] -= cb * at(i, j);
    }
  }

  int m_, cols_, stride_;
  std::vector<double> t_;
  std::vector<double> d_;  // reduced costs; d_[cols_] = -objective
  std::vector<int> basis_;
  std::vector<int> nz_;
};

enum class PhaseOutcome { kOptimal, kUnbounded, kLimit };

}  // namespace

Result DenseSimplex::solve(const Model& model) {
  const int n = model.num_cols();
  // Expanded row list: model rows, then finite upper bounds.
  std::vector<Row> rows = model.rows;
  for (int j = 0; j < n; ++j) {
    if (model.upper[j] < kInf) {
      rows.push_back({{{j, 1.0}}, RowSense::kLessEqual, model.upper[j], ""});
    }
  }
  const int m = static_cast<int>(rows.size());
  std::vector<double> sign(m, 1.0);
  std::vector<RowSense> sense(m);
  for (int i = 0; i < m; ++i) {
    sense[i] = rows[i].sense;
    if (rows[i].rhs < 0) {
      sign[i] = -1.0;
      if (sense[i] == RowSense::kLessEqual) {
        sense[i] = RowSense::kGreaterEqual;
      } else if (sense[i] == RowSense::kGreaterEqual) {
        sense[i] = RowSense::kLessEqual;
      }
    }
  }
  // Column layout: structural | slack/surplus | artificial.
  std::vector<int> slack_col(m, -1), art_col(m, -1), init_col(m, -1);
  int cols = n;
  for (int i = 0; i < m; ++i) {
    if (sense[i] != RowSense::kEqual) slack_col[i] = cols++;
  }
  const int first_art = cols;
  for (int i = 0; i < m; ++i) {
    if (sense[i] != RowSense::kLessEqual) art_col[i] = cols++;
  }
  Tableau tab(m, cols);
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, a] : rows[i].coefs) tab.at(i, j) += sign[i] * a;
    tab.rhs(i) = sign[i] * rows[i].rhs;
    if (slack_col[i] >= 0) {
      tab.at(i, slack_col[i]) = sense[i] == RowSense::kLessEqual ? 1.0 : -1.0;
    }
    if (art_col[i] >= 0) {
      tab.at(i, art_col[i]) = 1.0;
      init_col[i] = art_col[i];
    } else {
      init_col[i] = slack_col[i];
    }
    tab.basis_[i] = init_col[i];
  }

  Result result;
  const long cap = options_.max_iterations > 0
                       ? options_.max_iterations
                       : 200L * (m + cols) + 10000;
  std::vector<bool> barred(cols, false);

  auto run_phase = [&]() -> PhaseOutcome {
    int streak = 0;
    bool bland = false;
    while (true) {
      if (result.iterations >= cap) return PhaseOutcome::kLimit;
      int enter = -1;
      double best = -options_.cost_tol;
      for (int j = 0; j < cols; ++j) {
        if (barred[j]) continue;
        if (tab.d_[j] < best) {
          enter = j;
          if (bland) break;
          best = tab.d_[j];
        }
      }
      if (enter < 0) return PhaseOutcome::kOptimal;
      int leave = -1;
      double ratio = kInf;
      double piv = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = tab.at(i, enter);
        if (a <= options_.pivot_tol) continue;
        const double q = std::max(0.0, tab.rhs(i)) / a;
        bool take = false;
        if (leave < 0 || q < ratio - 1e-12) {
          take = true;
        } else if (q <= ratio + 1e-12) {
          take = bland ? tab.basis_[i] < tab.basis_[leave] : a > piv;
        }
        if (take) {
          leave = i;
          ratio = q;
          piv = a;
        }
      }
      if (leave < 0) return PhaseOutcome::kUnbounded;
      if (ratio <= 1e-12) {
        if (++streak > options_.degenerate_streak) bland = true;
      } else {
        streak = 0;
        bland = false;
      }
      tab.pivot(leave, enter);
      for (int i = 0; i < m; ++i) {
        if (tab.rhs(i) < 0 && tab.rhs(i) > -options_.feasibility_tol) tab.rhs(i) = 0.0;
      }
      ++result.iterations;
    }
  };

  // Phase I.
  std::vector<double> cost1(cols, 0.0);
  bool any_art = false;
  for (int i = 0; i < m; ++i) {
    if (art_col[i] >= 0) {
      cost1[art_col[i]] = 1.0;
      any_art = true;
    }
  }
  if (any_art) {
    tab.price(cost1);
    const PhaseOutcome o = run_phase();
    if (o == PhaseOutcome::kLimit) {
      result.status = Status::kIterationLimit;
      return result;
    }
    double infeas = 0.0, scale = 1.0;
    for (int i = 0; i < m; ++i) {
      scale = std::max(scale, std::fabs(tab.rhs(i)));
      if (tab.basis_[i] >= first_art) infeas += tab.rhs(i);
    }
    if (infeas > options_.feasibility_tol * scale * 10) {
      result.status = Status::kInfeasible;
      return result;
    }
    // Drive zero-valued artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (tab.basis_[i] < first_art) continue;
      int best = -1;
      double mag = 1e-7;
      for (int j = 0; j < first_art; ++j) {
        if (std::fabs(tab.at(i, j)) > mag) {
          mag = std::fabs(tab.at(i, j));
          best = j;
        }
      }
      if (best >= 0) {
        tab.pivot(i, best);
        ++result.iterations;
      }
    }
    for (int j = first_art; j < cols; ++j) barred[j] = true;
  }

  // Phase II.
  std::vector<double> cost2(cols, 0.0);
  for (int j = 0; j < n; ++j) cost2[j] = model.cost[j];
  tab.price(cost2);
  const PhaseOutcome o = run_phase();
  if (o == PhaseOutcome::kLimit) {
    result.status = Status::kIterationLimit;
    return result;
  }
  if (o == PhaseOutcome::kUnbounded) {
    result.status = Status::kUnbounded;
    return result;
  }
  result.status = Status::kOptimal;
  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (tab.basis_[i] < n) result.x[tab.basis_[i]] = std::max(0.0, tab.rhs(i));
  }
  result.objective = model.offset;
  for (int j = 0; j < n; ++j) result.objective += model.cost[j] * result.x[j];
  result.duals.assign(model.num_rows(), 0.0);
  for (int i = 0; i < model.num_rows(); ++i) {
    double y = 0.0;
    for (int k = 0; k < m; ++k) {
      const double cb = cost2[tab.basis_[k]];
      if (cb != 0.0) y += cb * tab.at(k, init_col[i]);
    }
    // The initial basic column of a >= row after normalisation is the
    // artificial (+1), of a <= row the slack (+1); both read B^{-1} directly.
    result.duals[i] = sign[i] * y;
  }
  return result;
}

}  // namespace pcrpp::lp
