#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "berry/errors.hpp"
#include "berry/specfun.hpp"

namespace berry {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int evaluations = 0;
};

/// Maximum number of live subintervals per call.
inline constexpr int kMaxSubintervals = 2000;

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

inline void require_finite(const Segment& s) {
  if (!std::isfinite(s.value) || !std::isfinite(s.err)) {
    throw NonConvergence("integrate: non-finite integrand on [" + std::to_string(s.a) + ", " +
                             std::to_string(s.b) + "]",
                         s.value, s.err);
  }
}

template <class F>
Segment gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double ahalf = std::abs(half);
  resasc *= ahalf;
  resabs *= ahalf;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {a, b, resk * half, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
///
/// The interval is first cut at every breakpoint strictly inside (lo, hi);
/// afterwards the piece with the largest error estimate is bisected until
/// the summed estimate is within max(abs_tol, rel_tol |value|). The rule
/// never samples the endpoints, so integrable endpoint singularities are
/// fine. Throws NonConvergence once kMaxSubintervals pieces are live.
template <class F>
QuadResult integrate(F&& f, double lo, double hi, std::span<const double> breakpoints,
                     const Tolerance& tol = {}) {
  if (!(lo <= hi)) throw DomainError("integrate: need lo <= hi");
  if (lo == hi) return {};

  std::vector<double> cuts{lo};
  for (double x : breakpoints) {
    if (x > lo && x < hi) cuts.push_back(x);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<detail::Segment> heap;
  double total = 0.0;
  double err = 0.0;
  int evals = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto seg = detail::gk15(f, cuts[i], cuts[i + 1]);
    detail::require_finite(seg);
    evals += 15;
    total += seg.value;
    err += seg.err;
    heap.push(seg);
  }

  auto within = [&] { return err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total)); };
  while (!within()) {
    if (static_cast<int>(heap.size()) >= kMaxSubintervals) {
      throw NonConvergence("integrate: subdivision limit reached on [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "], err " + std::to_string(err),
                           total, err);
    }
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergence("integrate: interval collapsed to machine precision", total, err);
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    detail::require_finite(left);
    detail::require_finite(right);
    evals += 30;
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
  }

  // Rebuild the sums from the pieces; the running update drifts slightly.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().err;
    heap.pop();
  }
  return {total, err, evals};
}

template <class F>
QuadResult integrate(F&& f, double lo, double hi, const Tolerance& tol = {}) {
  return integrate(std::forward<F>(f), lo, hi, std::span<const double>{}, tol);
}

/// int_lo^inf f(t) dt through t = lo + (1 - s)/s, s in (0, 1].
template <class F>
QuadResult integrate_to_infinity(F&& f, double lo, const Tolerance& tol = {}) {
  auto mapped = [&f, lo](double s) {
    const double t = lo + (1.0 - s) / s;
    const double v = f(t);
    return v == 0.0 ? 0.0 : v / (s * s);
  };
  return integrate(mapped, 0.0, 1.0, std::span<const double>{}, tol);
}

}  // namespace berry
