#include "berry/cfbounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "berry/constants.hpp"
#include "berry/errors.hpp"
#include "berry/quadrature.hpp"

namespace berry {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// sin(u ell/4 ^ pi/2); the cap starts at u = 2 pi / ell.
double capped_sin(double u, double ell) {
  return std::sin(std::min(0.25 * u * ell, 0.5 * kPi));
}

ProblemPoint validated(const ProblemPoint& p) {
  p.validate();
  return p;
}

double positive_root_n(int n) { return std::sqrt(static_cast<double>(n)); }

// (1/n) sum_{k<n} b^{n-1-k} a^k = (b^n - a^n)/(n (b - a)).
double geometric_mean_sum(double b, double a, int n) {
  if (std::abs(b - a) > 1e-6 * std::max(a, b)) {
    return (std::pow(b, n) - std::pow(a, n)) / (n * (b - a));
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::pow(b, n - 1 - k) * std::pow(a, k);
  return sum / n;
}

}  // namespace

ProblemPoint ProblemPoint::from_beta3(int n, double beta3, double shift) {
  ProblemPoint p;
  p.n = n;
  p.beta3 = beta3;
  p.shift = shift;
  const double root_n = std::sqrt(static_cast<double>(n));
  p.lyap = beta3 / root_n;
  p.eps = p.lyap + shift / root_n;
  p.validate();
  return p;
}

ProblemPoint ProblemPoint::from_eps(int n, double eps, double shift) {
  ProblemPoint p;
  p.n = n;
  p.shift = shift;
  p.eps = eps;
  const double root_n = std::sqrt(static_cast<double>(n));
  p.lyap = eps - shift / root_n;
  p.beta3 = p.lyap * root_n;
  p.validate();
  return p;
}

void ProblemPoint::validate() const {
  if (n < 1) throw DomainError("ProblemPoint: n must be >= 1");
  if (!(beta3 >= 1.0 - 1e-12) || !std::isfinite(beta3)) {
    throw DomainError("ProblemPoint: beta3 must be >= 1 (got " + std::to_string(beta3) + ")");
  }
  if (!(shift >= 0.0)) throw DomainError("ProblemPoint: shift must be >= 0");
}

double psi(double t, double eps) {
  if (!(eps > 0.0)) throw DomainError("psi: eps must be positive");
  const auto& c = paper_constants();
  const double a = std::abs(t);
  const double x = eps * a;
  if (x <= c.theta0) return a * a * (0.5 - c.kappa * x);
  if (x <= 2.0 * kPi) return (1.0 - std::cos(x)) / (eps * eps);
  return 0.0;
}

double fn_abs_majorant(double t, const ProblemPoint& p, MajorantKind kind) {
  const double n = p.n;
  const double a = std::abs(t);
  const bool split_valid = a <= 0.5 * kPi * std::sqrt(n);
  if (kind == MajorantKind::CosSinSplit && !split_valid) {
    throw DomainError("fn_abs_majorant: CosSinSplit needs |t| <= (pi/2) sqrt(n)");
  }

  double bound = 1.0;
  if (kind != MajorantKind::CosSinSplit) {
    const double base = 1.0 - 2.0 * psi(a, p.lyap + 1.0 / std::sqrt(n)) / n;
    bound = std::min(bound, base <= 0.0 ? 0.0 : std::pow(base, 0.5 * n));
  }
  if (kind != MajorantKind::ShiftedPsi && split_valid) {
    const double c = 1.0 - psi(a, p.lyap) / n;
    const double a3 = a * a * a;
    const double s = p.lyap * a3 / (6.0 * n);
    bound = std::min(bound, std::pow(c * c + s * s, 0.5 * n));
  }
  return bound;
}

std::vector<double> frequency_seams(const ProblemPoint& p) {
  const auto& c = paper_constants();
  const double n = p.n;
  const double shifted = p.lyap + 1.0 / std::sqrt(n);
  const double edge = 0.5 * kPi * std::sqrt(n);
  std::vector<double> seams = {c.theta0 / shifted, 2.0 * kPi / shifted, c.theta0 / p.lyap,
                               2.0 * kPi / p.lyap, edge};

  // Crossings of the two |f_n| majorants inside the CosSinSplit range.
  auto gap = [&p](double u) {
    return fn_abs_majorant(u, p, MajorantKind::ShiftedPsi) -
           fn_abs_majorant(u, p, MajorantKind::CosSinSplit);
  };
  constexpr int kScan = 64;
  Tolerance tol;
  tol.abs_tol = 1e-11;
  double prev_u = edge / kScan;
  double prev_g = gap(prev_u);
  for (int i = 2; i <= kScan; ++i) {
    const double u = edge * i / kScan;
    const double g = gap(u);
    if (prev_g != 0.0 && g != 0.0 && std::signbit(prev_g) != std::signbit(g)) {
      seams.push_back(find_root_bisect(gap, prev_u, u, tol).root);
    }
    prev_u = u;
    prev_g = g;
  }
  std::sort(seams.begin(), seams.end());
  return seams;
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> w, double c,
                                       std::vector<double> seams, double step)
    : w_(std::move(w)), c_(c), step_(step) {
  for (double x : seams) {
    if (x > 0.0 && std::isfinite(x)) seams_.push_back(x);
  }
  std::sort(seams_.begin(), seams_.end());
}

// int_a^b w(u) e^{c (u^2 - b^2)} du; the weight never exceeds 1.
double CumulativeIntegral::scaled_piece(double a, double b) const {
  const double cb2 = c_ * b * b;
  auto g = [&](double u) {
    const double w = w_(u);
    return w == 0.0 ? 0.0 : w * std::exp(c_ * u * u - cb2);
  };
  return integrate(g, a, b, kInnerTolerance).value;
}

void CumulativeIntegral::extend_to(double t) const {
  while (anchors_.back() < t) {
    const double last = anchors_.back();
    double next = (std::floor(last / step_) + 1.0) * step_;
    if (next <= last) next += step_;
    const auto seam = std::upper_bound(seams_.begin(), seams_.end(), last);
    if (seam != seams_.end()) next = std::min(next, *seam);
    const double carried = values_.back() * std::exp(c_ * (last * last - next * next));
    values_.push_back(carried + scaled_piece(last, next));
    anchors_.push_back(next);
  }
}

double CumulativeIntegral::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  extend_to(t);
  const auto it = std::upper_bound(anchors_.begin(), anchors_.end(), t) - 1;
  const std::size_t j = static_cast<std::size_t>(it - anchors_.begin());
  const double a = anchors_[j];
  if (a == t) return values_[j];
  return values_[j] * std::exp(c_ * (a * a - t * t)) + scaled_piece(a, t);
}

Majorants::Majorants(const ProblemPoint& p)
    : p_(validated(p)),
      seams_(frequency_seams(p_)),
      integral_(
          [p = p_](double u) {
            const double power = static_cast<double>(p.n - 1) / p.n;
            const double w = u * capped_sin(u, p.lyap);
            return power == 0.0 ? w : w * std::pow(fn_abs_majorant(u, p), power);
          },
          0.5, seams_),
      telescoping_([ell = p_.lyap](double u) { return u * capped_sin(u, ell); }, 0.5 / p_.n,
                   {2.0 * kPi / p_.lyap}),
      switches_([this](double t) {
        return std::array<double, 3>{rn_integral(t), rn_telescoping(t),
                                     std::min(2.0, abs_fn(t) + std::exp(-0.5 * t * t))};
      }) {}

double Majorants::rn_integral(double t) const {
  if (t < 0.0) throw DomainError("rn_bound_integral: t must be >= 0");
  return 2.0 * integral_(t);
}

double Majorants::rn_telescoping(double t) const {
  if (t < 0.0) throw DomainError("rn_bound_telescoping: t must be >= 0");
  if (t == 0.0) return 0.0;
  // telescoping_(t) already carries the factor a = e^{-t^2/(2n)}.
  const double b = std::pow(abs_fn(t), 1.0 / p_.n);
  const double a = std::exp(-0.5 * t * t / p_.n);
  return 2.0 * telescoping_(t) * geometric_mean_sum(b, a, p_.n);
}

double Majorants::rn(double t) const {
  if (t < 0.0) throw DomainError("rn_bound: t must be >= 0");
  if (t == 0.0) return 0.0;
  const double trivial = std::min(2.0, abs_fn(t) + std::exp(-0.5 * t * t));
  return std::min({trivial, rn_integral(t), rn_telescoping(t)});
}

SwitchScan::SwitchScan(Branches branches, double step)
    : branches_(std::move(branches)), step_(step) {}

std::vector<double> SwitchScan::up_to(double s) const {
  constexpr std::array<std::pair<int, int>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
  Tolerance tol;
  tol.abs_tol = 1e-10;
  while (scanned_ * step_ < s) {
    const double lo = scanned_ * step_;
    const double hi = (scanned_ + 1) * step_;
    const auto now = branches_(hi);
    if (scanned_ > 0) {
      for (const auto& [i, j] : kPairs) {
        const double before = last_[i] - last_[j];
        const double after = now[i] - now[j];
        if (std::isfinite(before) && std::isfinite(after) && before != 0.0 && after != 0.0 &&
            std::signbit(before) != std::signbit(after)) {
          auto gap = [&, i = i, j = j](double t) {
            const auto b = branches_(t);
            return b[i] - b[j];
          };
          found_.push_back(find_root_bisect(gap, lo, hi, tol).root);
        }
      }
    }
    last_ = now;
    ++scanned_;
  }
  std::vector<double> out;
  for (double x : found_) {
    if (x <= s) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double rn_bound_integral(double t, const ProblemPoint& p) { return Majorants(p).rn_integral(t); }

double rn_bound_telescoping(double t, const ProblemPoint& p) {
  return Majorants(p).rn_telescoping(t);
}

double rn_bound(double t, const ProblemPoint& p) { return Majorants(p).rn(t); }

namespace {

std::vector<double> tail_seams(double eps, double shift, int n_floor) {
  if (!(eps > 0.0) || !(shift >= 0.0 && shift < 1.0) || n_floor < 1) {
    throw DomainError("TailEnvelope: need eps > 0, 0 <= shift < 1, n_floor >= 1");
  }
  const double psi_eps = eps + (1.0 - shift) / positive_root_n(n_floor);
  const auto& c = paper_constants();
  std::vector<double> seams = {c.theta0 / psi_eps, 2.0 * kPi / psi_eps, 2.0 * kPi / eps};
  std::sort(seams.begin(), seams.end());
  return seams;
}

}  // namespace

TailEnvelope::TailEnvelope(double eps, double shift, int n_floor)
    : eps_(eps),
      shift_(shift),
      n_floor_(n_floor),
      seams_(tail_seams(eps, shift, n_floor)),
      // |f_n|^{(n-1)/n} <= M^{(n_floor-1)/n_floor} because M <= 1.
      integral_(
          [eps, e = psi_eps(), power = static_cast<double>(n_floor - 1) / n_floor](double u) {
            const double w = u * capped_sin(u, eps);
            return power == 0.0 ? w : w * std::pow(std::exp(-psi(u, e)), power);
          },
          0.5, seams_),
      telescoping_([eps](double u) { return u * capped_sin(u, eps); }, 0.5 / n_floor,
                   {2.0 * kPi / eps}),
      switches_([this](double t) { return branches(t); }) {}

double TailEnvelope::psi_eps() const {
  return eps_ + (1.0 - shift_) / positive_root_n(n_floor_);
}

double TailEnvelope::abs_fn(double t) const { return std::exp(-psi(t, psi_eps())); }

// Integral estimate, telescoping estimate, trivial bound.
std::array<double, 3> TailEnvelope::branches(double t) const {
  const double m = abs_fn(t);
  const double gauss = std::exp(-0.5 * t * t);
  std::array<double, 3> out{2.0 * integral_(t), kInf, std::min(2.0, m + gauss)};

  // The telescoping sum (1/n) sum_k M^{1-x_k} A^{x_k}, x_k = (k+1)/n, is a
  // right Riemann sum of a monotone exponential in x; it is at most the
  // logarithmic mean L(A, M) plus max(0, A - M)/n.
  const double grow = 0.5 * t * t / n_floor_;
  if (grow <= 600.0) {
    double log_mean;
    if (m <= 0.0) {
      log_mean = 0.0;
    } else if (std::abs(gauss - m) <= 1e-12 * std::max(gauss, m)) {
      log_mean = m;
    } else {
      log_mean = (gauss - m) / (std::log(gauss) - std::log(m));
    }
    const double sum = log_mean + std::max(0.0, gauss - m) / n_floor_;
    out[1] = 2.0 * telescoping_(t) * std::exp(grow) * sum;
  }
  return out;
}

double TailEnvelope::rn(double t) const {
  if (t <= 0.0) return 0.0;
  const auto b = branches(t);
  return std::min({b[0], b[1], b[2]});
}

}  // namespace berry
