#pragma once

#include <array>
#include <functional>
#include <vector>

#include "berry/specfun.hpp"

namespace berry {

/// A cell (n, beta3) of the bound. The Lyapunov fraction lyap = beta3/sqrt(n)
/// and eps = lyap + shift/sqrt(n) are stored alongside.
struct ProblemPoint {
  int n = 1;
  double beta3 = 1.0;
  double lyap = 1.0;
  double shift = 0.0;
  double eps = 1.0;

  static ProblemPoint from_beta3(int n, double beta3, double shift);
  static ProblemPoint from_eps(int n, double eps, double shift);

  /// Throws DomainError unless n >= 1, beta3 >= 1 and shift >= 0.
  void validate() const;
};

enum class MajorantKind {
  ShiftedPsi,   // [1 - 2 psi(t, lyap + 1/sqrt n)/n]^{n/2}, every t
  CosSinSplit,  // [(1 - psi(t, lyap)/n)^2 + lyap^2 t^6/(36 n^2)]^{n/2}, |t| <= (pi/2) sqrt n
  Min,          // pointwise minimum, CosSinSplit only inside its range
};

/// Tolerance for the inner integrals of the r_n estimates.
inline constexpr Tolerance kInnerTolerance{1e-12, 1e-10, 200};

/// Exponent function of the |f| majorants:
///   t^2/2 - kappa eps |t|^3     for eps|t| <= theta0,
///   (1 - cos(eps t))/eps^2      for theta0 < eps|t| <= 2 pi,
///   0                           beyond.
/// Nonnegative, even in t, and nonincreasing in eps.
double psi(double t, double eps);

/// Upper bound for |f_n(t)| valid for every F with the given (n, beta3).
double fn_abs_majorant(double t, const ProblemPoint& p, MajorantKind kind = MajorantKind::Min);

/// r_n(t) <= 2 e^{-t^2/2} int_0^t u e^{u^2/2} sin(u lyap/4 ^ pi/2) |f_n(u)|^{(n-1)/n} du
/// with |f_n| replaced by its Min majorant.
double rn_bound_integral(double t, const ProblemPoint& p);

/// r_n(t) <= 2 int_0^t u e^{u^2/(2n)} sin(u lyap/4 ^ pi/2) du
///           * (1/n) sum_{k<n} |f(t/sqrt n)|^{n-k-1} e^{-(k+1) t^2/(2n)},
/// i.e. |a^n - b^n| <= |a - b| sum |a|^k |b|^{n-k-1} with a = e^{-t^2/(2n)},
/// b = f(t/sqrt n) and the n = 1 integral estimate for |a - b|.
double rn_bound_telescoping(double t, const ProblemPoint& p);

/// min of both estimates, the trivial |f_n| + e^{-t^2/2}, and 2.
double rn_bound(double t, const ProblemPoint& p);

/// Frequencies where the majorants or the sin cap have a kink: the psi
/// seams, the sin cap, the CosSinSplit range edge and every crossing of the
/// two |f_n| majorants. Callers pass them to the quadrature as breakpoints.
std::vector<double> frequency_seams(const ProblemPoint& p);

/// F(t) = int_0^t w(u) e^{c (u^2 - t^2)} du for t >= 0. Pieces between fixed
/// anchors (multiples of step and the given seams) are integrated once and
/// kept, so a query costs one short integral. The anchors do not depend on
/// the order of queries, so neither do the values. Not safe for concurrent
/// use.
class CumulativeIntegral {
 public:
  CumulativeIntegral(std::function<double(double)> w, double c, std::vector<double> seams,
                     double step = 0.25);

  double operator()(double t) const;

 private:
  double scaled_piece(double a, double b) const;
  void extend_to(double t) const;

  std::function<double(double)> w_;
  double c_;
  std::vector<double> seams_;
  double step_;
  mutable std::vector<double> anchors_{0.0};
  mutable std::vector<double> values_{0.0};
};

/// Points in (0, s] where two of three branch functions cross, so where
/// their minimum can have a kink. The scan grid is fixed, so the answer does
/// not depend on earlier calls. Not safe for concurrent use.
class SwitchScan {
 public:
  using Branches = std::function<std::array<double, 3>(double)>;
  explicit SwitchScan(Branches branches, double step = 0.05);

  std::vector<double> up_to(double s) const;

 private:
  Branches branches_;
  double step_;
  mutable int scanned_ = 0;
  mutable std::array<double, 3> last_{0.0, 0.0, 0.0};
  mutable std::vector<double> found_;
};

/// The majorants of one ProblemPoint with their seams and the inner r_n
/// integrals cached. Bound assembly keeps one per cell for every (t0, T)
/// tried; the free functions above build a fresh one per call. Like
/// CumulativeIntegral, not safe for concurrent use.
class Majorants {
 public:
  explicit Majorants(const ProblemPoint& p);
  Majorants(const Majorants&) = delete;
  Majorants& operator=(const Majorants&) = delete;

  const ProblemPoint& point() const { return p_; }
  const std::vector<double>& seams() const { return seams_; }

  double abs_fn(double t) const { return fn_abs_majorant(t, p_, MajorantKind::Min); }
  double rn_integral(double t) const;
  double rn_telescoping(double t) const;
  double rn(double t) const;

  /// Frequencies in (0, s] where two r_n branches cross.
  std::vector<double> rn_switches(double s) const { return switches_.up_to(s); }

 private:
  ProblemPoint p_;
  std::vector<double> seams_;
  CumulativeIntegral integral_;
  CumulativeIntegral telescoping_;
  SwitchScan switches_;
};

/// n-free envelope covering every n >= n_floor at fixed eps. For such n,
/// lyap = eps - shift/sqrt n lies in (0, eps) and
///   lyap + 1/sqrt n <= eps + (1 - shift)/sqrt(n_floor),
/// so exp{-psi(t, eps + (1 - shift)/sqrt n_floor)} bounds |f_n(t)|. The
/// r_n estimates are bounded through their monotonicity in lyap and n.
class TailEnvelope {
 public:
  TailEnvelope(double eps, double shift, int n_floor);
  TailEnvelope(const TailEnvelope&) = delete;
  TailEnvelope& operator=(const TailEnvelope&) = delete;

  double eps() const { return eps_; }
  double shift() const { return shift_; }
  int n_floor() const { return n_floor_; }

  double psi_eps() const;
  double abs_fn(double t) const;
  double rn(double t) const;
  const std::vector<double>& seams() const { return seams_; }
  std::vector<double> rn_switches(double s) const { return switches_.up_to(s); }

 private:
  std::array<double, 3> branches(double t) const;

  double eps_;
  double shift_;
  int n_floor_;
  std::vector<double> seams_;
  CumulativeIntegral integral_;
  CumulativeIntegral telescoping_;
  SwitchScan switches_;
};

}  // namespace berry
