#ifndef PCRPP_RATIOCHECK_HPP_
#define PCRPP_RATIOCHECK_HPP_

#include <array>
#include <cstdint>
#include <string>

namespace pcrpp {

using Real = long double;

struct RatioParams {
  Real kappa0 = 0;
  Real kappa = 1;
  Real beta = 1;

  Real L() const { return kappa - kappa0; }
};

// (0.36621005, 0.99678328, 1.98094420).
RatioParams paper_params();

// Throws Error unless 0 <= kappa0 < kappa <= 1 and beta > 0.
void validate(const RatioParams& p);

Real nu(const RatioParams& p);
// Same normaliser from numerical integration of (3 - d)(kappa - d)^beta.
Real nu_by_quadrature(const RatioParams& p);

Real g(const RatioParams& p);
Real phi(const RatioParams& p, Real xi, Real delta);
Real h(const RatioParams& p, Real xi);
// h(xi) / (1 - xi); throws Error at xi = 1.
Real F(const RatioParams& p, Real xi);

// The three terms whose maximum bounds the golden-ratio analysis.
std::array<Real, 3> golden_terms(Real kappa, Real delta);

struct RatioCertificate {
  Real step = 0;
  std::uint64_t points = 0;
  Real grid_max = 0;
  Real argmax = 0;
  Real slack = 0;
  Real bound = 0;       // grid_max + slack
  bool conclusive = false;  // bound < 1.6
};

// Sweeps F over {kappa0 + j*step} plus kappa; grid points at xi = 1 are skipped.
RatioCertificate verify_bound(const RatioParams& p, Real step, int threads = 1);

struct AlphaComponents {
  Real g = 0;
  Real invgap = 0;  // 1 / (1 - kappa0)
  Real max_f = 0;
  Real argmax = 0;
  Real alpha() const;
};

AlphaComponents alpha_components(const RatioParams& p, Real step = 1e-6L, int threads = 1);

// Fixed-field block followed by key=value lines.
std::string format_certificate(const RatioParams& p, const RatioCertificate& c,
                               const AlphaComponents& a);

}  // namespace pcrpp

#endif  // PCRPP_RATIOCHECK_HPP_
