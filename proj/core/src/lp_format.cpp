#include <iomanip>
#include <sstream>

#include "pcrpp/lp_backend.hpp"

namespace pcrpp::lp {
namespace {

std::string col_name(const Model& m, int j) {
  if (j < static_cast<int>(m.col_names.size()) && !m.col_names[j].empty()) {
    return m.col_names[j];
  }
  return "c" + std::to_string(j);
}

void write_terms(std::ostream& out, const Model& m,
                 const std::vector<std::pair<int, double>>& terms) {
  bool first = true;
  for (const auto& [j, a] : terms) {
    if (a == 0.0) continue;
    if (!first || a < 0) out << (a < 0 ? " - " : " + ");
    if (first && a >= 0) out << ' ';
    out << std::fabs(a) << ' ' << col_name(m, j);
    first = false;
  }
  if (first) out << " 0 " << col_name(m, 0);
}

}  // namespace

std::string to_lp_format(const Model& model) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "\\ objective constant " << model.offset << '\n';
  out << "Minimize\n obj:";
  std::vector<std::pair<int, double>> obj;
  for (int j = 0; j < model.num_cols(); ++j) obj.push_back({j, model.cost[j]});
  write_terms(out, model, obj);
  out << "\nSubject To\n";
  for (int i = 0; i < model.num_rows(); ++i) {
    const Row& r = model.rows[i];
    out << ' ' << (r.name.empty() ? "r" + std::to_string(i) : r.name) << ':';
    write_terms(out, model, r.coefs);
    switch (r.sense) {
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << r.rhs << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < model.num_cols(); ++j) {
    if (model.upper[j] < kInf) {
      out << " 0 <= " << col_name(model, j) << " <= " << model.upper[j] << '\n';
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace pcrpp::lp
