#include "berry/prawitz.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "berry/errors.hpp"
#include "berry/kernel.hpp"
#include "berry/quadrature.hpp"

namespace berry {
namespace {

// Frequency seams become breakpoints t = seam / T on the unit interval.
std::vector<double> scaled_seams(const std::vector<double>& seams, double T) {
  std::vector<double> out;
  out.reserve(seams.size());
  for (double s : seams) out.push_back(s / T);
  return out;
}

template <class F>
QuadResult term(const char* name, F&& f, double lo, double hi, const std::vector<double>& cuts) {
  try {
    return integrate(std::forward<F>(f), lo, hi, cuts, kTermTolerance);
  } catch (const NonConvergence& e) {
    throw NonConvergence(std::string(name) + ": " + e.what(), e.value(), e.err_estimate());
  }
}

template <class AbsFn, class Rn>
BoundBreakdown assemble(AbsFn&& abs_fn, Rn&& rn, const std::vector<double>& seams,
                        const SmoothingParams& s) {
  s.validate();
  const double T = s.T;
  const auto cuts = scaled_seams(seams, T);

  const auto q1 = term(
      "i1", [&](double t) { return kernel_K_abs(t) * rn(T * t); }, 0.0, s.t0, cuts);
  const auto q2 = term(
      "i2", [&](double t) { return kernel_K_abs(t) * abs_fn(T * t); }, s.t0, 1.0, cuts);
  const auto q3 = term(
      "i3",
      [&](double t) { return kernel_K_depoled_abs(t) * std::exp(-0.5 * T * T * t * t); }, 0.0,
      s.t0, {});

  BoundBreakdown b;
  b.i1 = 2.0 * q1.value;
  b.i2 = 2.0 * q2.value;
  b.i3 = 2.0 * q3.value;
  b.i4 = gaussian_tail_term(s);
  b.quad_err = 2.0 * (q1.err_estimate + q2.err_estimate + q3.err_estimate) + 1e-12 * b.i4;
  b.total = b.i1 + b.i2 + b.i3 + b.i4;
  return b;
}

}  // namespace

void SmoothingParams::validate() const {
  if (!(t0 > 0.0 && t0 <= 1.0)) throw DomainError("SmoothingParams: t0 must lie in (0, 1]");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("SmoothingParams: T must be positive");
}

double gaussian_tail_term(const SmoothingParams& s) {
  return exp_integral_e1(0.5 * s.T * s.T * s.t0 * s.t0) / (2.0 * std::numbers::pi);
}

BoundBreakdown prawitz_bound(const ProblemPoint& p, const SmoothingParams& s) {
  return prawitz_bound(Majorants(p), s);
}

BoundBreakdown prawitz_bound(const Majorants& m, const SmoothingParams& s) {
  s.validate();
  auto seams = m.seams();
  const auto switches = m.rn_switches(s.T * s.t0);
  seams.insert(seams.end(), switches.begin(), switches.end());
  return assemble([&m](double t) { return m.abs_fn(t); }, [&m](double t) { return m.rn(t); },
                  seams, s);
}

BoundBreakdown prawitz_bound_exact_cf(const DiscreteDistribution& d, int n,
                                      const SmoothingParams& s) {
  if (n < 1) throw DomainError("prawitz_bound_exact_cf: n must be >= 1");
  return assemble([&](double t) { return fn_abs_exact(d, n, t); },
                  [&](double t) { return rn_exact(d, n, t); }, {}, s);
}

BoundBreakdown prawitz_bound_tail(const TailEnvelope& env, const SmoothingParams& s) {
  s.validate();
  auto seams = env.seams();
  const auto switches = env.rn_switches(s.T * s.t0);
  seams.insert(seams.end(), switches.begin(), switches.end());
  return assemble([&env](double t) { return env.abs_fn(t); },
                  [&env](double t) { return env.rn(t); }, seams, s);
}

}  // namespace berry
