#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "berry/errors.hpp"

namespace berry {

/// Stopping rule shared by the root finder, the 1-D minimizer and the
/// quadrature routines.
struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iter = 200;

  void validate() const;
};

/// Standard normal distribution function.
double std_normal_cdf(double x);

/// Exponential integral E1(x) = int_x^inf e^{-u}/u du, x > 0.
double exp_integral_e1(double x);

struct RootResult {
  double root;
  double lo;  // final bracket
  double hi;
  int iterations;
};

/// Plain bisection. The returned bracket always contains a sign change and
/// its width is (hi - lo) / 2^iterations.
template <class F>
RootResult find_root_bisect(F&& f, double lo, double hi, const Tolerance& tol = {}) {
  tol.validate();
  if (!(lo < hi)) throw DomainError("find_root_bisect: need lo < hi");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0};
  if (fhi == 0.0) return {hi, hi, hi, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NoSignChange("find_root_bisect: f(lo) and f(hi) have the same sign");
  }
  for (int k = 0; k < tol.max_iter; ++k) {
    if (hi - lo <= tol.abs_tol) return {0.5 * (lo + hi), lo, hi, k};
    const double mid = lo + 0.5 * (hi - lo);
    const double fmid = f(mid);
    if (fmid == 0.0) return {mid, mid, mid, k + 1};
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= tol.abs_tol) return {0.5 * (lo + hi), lo, hi, tol.max_iter};
  throw MaxIterExceeded("find_root_bisect: bracket still wider than abs_tol");
}

struct Minimum {
  double argmin;
  double min;
  int evaluations;
};

/// Safeguarded golden-section search. `probes` equally spaced points
/// (endpoints included) are scanned first; golden section then refines the
/// bracket around the best probe. The returned minimum is never larger than
/// any probe value.
template <class F>
Minimum minimize_1d(F&& f, double lo, double hi, const Tolerance& tol = {}, int probes = 64) {
  tol.validate();
  if (!(lo < hi)) throw DomainError("minimize_1d: need lo < hi");
  probes = std::max(probes, 3);

  const double step = (hi - lo) / (probes - 1);
  int best = 0;
  double best_f = f(lo);
  double best_x = lo;
  for (int i = 1; i < probes; ++i) {
    const double x = i == probes - 1 ? hi : lo + i * step;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
      best = i;
    }
  }
  int evals = probes;

  double a = best == 0 ? lo : lo + (best - 1) * step;
  double b = best == probes - 1 ? hi : lo + (best + 1) * step;

  constexpr double kInvPhi = 0.6180339887498948482;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  evals += 2;
  int iter = 0;
  while (b - a > std::max(tol.abs_tol, tol.rel_tol * std::abs(0.5 * (a + b)))) {
    if (++iter > tol.max_iter) throw MaxIterExceeded("minimize_1d: golden section did not converge");
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  if (fc < best_f) {
    best_f = fc;
    best_x = c;
  }
  if (fd < best_f) {
    best_f = fd;
    best_x = d;
  }
  return {best_x, best_f, evals};
}

}  // namespace berry
