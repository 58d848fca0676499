#pragma once

#include "berry/cfbounds.hpp"
#include "berry/oracle.hpp"
#include "berry/specfun.hpp"

namespace berry {

/// Free parameters of the smoothing inequality: split point t0 in (0, 1]
/// and frequency cutoff T > 0.
struct SmoothingParams {
  double t0 = 0.4;
  double T = 5.0;

  void validate() const;
};

/// Right-hand side of the Prawitz smoothing inequality
///   Delta_n <= 2 int_0^t0 |K(t)| r_n(Tt) dt + 2 int_t0^1 |K(t)| |f_n(Tt)| dt
///            + 2 int_0^t0 |K(t) - i/(2 pi t)| e^{-T^2 t^2/2} dt
///            + (1/pi) int_t0^inf e^{-T^2 t^2/2} dt/t,
/// term by term, with the summed quadrature error estimates.
struct BoundBreakdown {
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
  double i4 = 0.0;
  double quad_err = 0.0;
  double total = 0.0;
};

/// Per-term tolerance of the outer integrals.
inline constexpr Tolerance kTermTolerance{1e-9, 1e-9, 200};

/// Bound valid for every F in F3 with the given (n, beta3).
BoundBreakdown prawitz_bound(const ProblemPoint& p, const SmoothingParams& s);

/// Overload reusing precomputed majorant seams.
BoundBreakdown prawitz_bound(const Majorants& m, const SmoothingParams& s);

/// Same inequality with the exact |f_n| and r_n of a discrete law.
BoundBreakdown prawitz_bound_exact_cf(const DiscreteDistribution& d, int n,
                                      const SmoothingParams& s);

/// Bound valid for all n >= env.n_floor at fixed eps.
BoundBreakdown prawitz_bound_tail(const TailEnvelope& env, const SmoothingParams& s);

/// The last term in closed form: E1(T^2 t0^2 / 2) / (2 pi).
double gaussian_tail_term(const SmoothingParams& s);

}  // namespace berry
