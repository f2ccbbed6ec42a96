#include "pcrpp/ratiocheck.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pcrpp/common.hpp"

namespace pcrpp {

RatioParams paper_params() { return {0.36621005L, 0.99678328L, 1.98094420L}; }

void validate(const RatioParams& p) {
  if (!(p.kappa0 >= 0 && p.kappa0 < p.kappa && p.kappa <= 1 && p.beta > 0)) {
    throw Error("ratio parameters out of domain");
  }
}

Real nu(const RatioParams& p) {
  validate(p);
  const Real L = p.L();
  const Real inv = (3 - p.kappa) * std::pow(L, p.beta + 1) / (p.beta + 1) +
                   std::pow(L, p.beta + 2) / (p.beta + 2);
  return 1 / inv;
}

Real nu_by_quadrature(const RatioParams& p) {
  validate(p);
  boost::math::quadrature::tanh_sinh<Real> integrator;
  const Real value = integrator.integrate(
      [&](Real d) { return (3 - d) * std::pow(std::max<Real>(p.kappa - d, 0), p.beta); },
      p.kappa0, p.kappa);
  return 1 / value;
}

Real g(const RatioParams& p) {
  const Real L = p.L();
  return nu(p) * ((7 - 4 * p.kappa) * std::pow(L, p.beta + 1) / (p.beta + 1) +
                  2 * std::pow(L, p.beta + 2) / (p.beta + 2));
}

Real phi(const RatioParams& p, Real xi, Real delta) {
  return (3 - delta - p.kappa) * (3 - delta) / (3 - delta - xi);
}

namespace {

// Cached pieces of h shared by every grid point.
struct HEval {
  RatioParams p;
  Real nu, L, Lb1, Lb2;

  explicit HEval(const RatioParams& params)
      : p(params),
        nu(pcrpp::nu(params)),
        L(params.L()),
        Lb1(std::pow(L, params.beta + 1)),
        Lb2(Lb1 * L) {}

  Real h(Real xi) const {
    const Real d = std::max<Real>(p.kappa - xi, 0);
    const Real db1 = std::pow(d, p.beta + 1);
    const Real db2 = db1 * d;
    const Real phi0 = phi(p, xi, p.kappa0);
    const Real phik = phi(p, xi, p.kappa);
    const Real bracket = (phi0 - phik) * (Lb2 - db2) / (p.beta + 2) +
                         phik * L * (Lb1 - db1) / (p.beta + 1);
    return 1 - xi * nu / L * bracket;
  }

  Real F(Real xi) const { return h(xi) / (1 - xi); }
};

}  // namespace

Real h(const RatioParams& p, Real xi) { return HEval(p).h(xi); }

Real F(const RatioParams& p, Real xi) {
  if (xi >= 1) throw Error("F is undefined at xi = 1");
  return HEval(p).F(xi);
}

std::array<Real, 3> golden_terms(Real kappa, Real delta) {
  return {(7 - 2 * delta - 2 * kappa) / (3 - delta), (3 - delta) / (3 - delta - kappa),
          1 / (1 - delta)};
}

RatioCertificate verify_bound(const RatioParams& p, Real step, int threads) {
  validate(p);
  if (!(step > 0)) throw Error("grid step must be positive");
  const HEval eval(p);
  std::uint64_t last = static_cast<std::uint64_t>(std::floor(p.L() / step));
  while (last > 0 && p.kappa0 + static_cast<Real>(last) * step > p.kappa) --last;
  const bool extra = p.kappa0 + static_cast<Real>(last) * step < p.kappa;
  const std::uint64_t count = last + 1 + (extra ? 1 : 0);
  auto point = [&](std::uint64_t j) {
    return j <= last ? p.kappa0 + static_cast<Real>(j) * step : p.kappa;
  };

  struct Best {
    Real value = -1;
    Real xi = 0;
    bool found = false;
  };
  const int workers = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(threads, 1), count)));
  std::vector<Best> best(workers);
  auto sweep = [&](int w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    Best b;
    for (std::uint64_t j = begin; j < end; ++j) {
      const Real xi = point(j);
      if (xi >= 1) continue;
      const Real f = eval.F(xi);
      if (!b.found || f > b.value) b = {f, xi, true};
    }
    best[w] = b;
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
    for (auto& t : pool) t.join();
  }
  Best overall;
  for (const Best& b : best) {
    if (b.found && (!overall.found || b.value > overall.value)) overall = b;
  }

  RatioCertificate c;
  c.step = step;
  c.points = count;
  c.grid_max = overall.value;
  c.argmax = overall.xi;
  c.slack = 32 * step / (1 - p.kappa);
  c.bound = c.grid_max + c.slack;
  c.conclusive = std::isfinite(static_cast<double>(c.bound)) && c.bound < 1.6L;
  return c;
}

Real AlphaComponents::alpha() const { return std::max({g, invgap, max_f}); }

AlphaComponents alpha_components(const RatioParams& p, Real step, int threads) {
  AlphaComponents a;
  a.g = g(p);
  a.invgap = 1 / (1 - p.kappa0);
  const RatioCertificate c = verify_bound(p, step, threads);
  a.max_f = c.grid_max;
  a.argmax = c.argmax;
  return a;
}

std::string format_certificate(const RatioParams& p, const RatioCertificate& c,
                               const AlphaComponents& a) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "kappa0      " << p.kappa0 << '\n'
      << "kappa       " << p.kappa << '\n'
      << "beta        " << p.beta << '\n'
      << "step        " << c.step << '\n'
      << "points      " << c.points << '\n'
      << "g           " << a.g << '\n'
      << "invgap      " << a.invgap << '\n'
      << "grid_max    " << c.grid_max << '\n'
      << "argmax      " << c.argmax << '\n'
      << "slack       " << c.slack << '\n'
      << "bound       " << c.bound << '\n'
      << "status      " << (c.conclusive ? "certified below 1.6" : "inconclusive") << '\n';
  out << std::setprecision(17);
  out << "g=" << a.g << '\n'
      << "invgap=" << a.invgap << '\n'
      << "grid_max=" << c.grid_max << '\n'
      << "argmax=" << c.argmax << '\n'
      << "slack=" << c.slack << '\n'
      << "bound=" << c.bound << '\n'
      << "points=" << c.points << '\n'
      << "conclusive=" << (c.conclusive ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace pcrpp
