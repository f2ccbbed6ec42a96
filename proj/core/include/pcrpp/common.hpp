#ifndef PCRPP_COMMON_HPP_
#define PCRPP_COMMON_HPP_

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcrpp {

// Absolute tolerance under which two reals are treated as equal.
inline constexpr double kEqualTol = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a checked postcondition fails; signals a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline bool approx_equal(double a, double b, double tol = kEqualTol) {
  return std::fabs(a - b) <= tol;
}

// Dense symmetric matrix indexed by unordered vertex pairs. Used for edge
// vectors on complete graphs.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  double operator()(int u, int v) const { return data_[index(u, v)]; }
  void set(int u, int v, double value) {
    data_[index(u, v)] = value;
    data_[index(v, u)] = value;
  }
  void add(int u, int v, double delta) { set(u, v, (*this)(u, v) + delta); }

  // Sum over the row of v, excluding the diagonal.
  double degree(int v) const {
    double s = 0.0;
    for (int u = 0; u < n_; ++u) {
      if (u != v) s += (*this)(v, u);
    }
    return s;
  }

  // Copy with one extra vertex appended (all new entries zero).
  SymMatrix grown(int extra) const {
    SymMatrix out(n_ + extra);
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) out.data_[out.index(u, v)] = (*this)(u, v);
    }
    return out;
  }

  bool operator==(const SymMatrix& o) const {
    return n_ == o.n_ && data_ == o.data_;
  }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<double> data_;
};

using EdgeKey = std::pair<int, int>;

inline EdgeKey make_key(int u, int v) {
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

}  // namespace pcrpp

#endif  // PCRPP_COMMON_HPP_
