#include "berry/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "berry/errors.hpp"
#include "berry/specfun.hpp"

namespace berry {
namespace {

constexpr double kMomentTol = 1e-12;
constexpr double kMergeTol = 1e-12;

void sort_and_merge(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!merged.empty() && a.x - merged.back().x <= kMergeTol) {
      merged.back().p += a.p;
    } else {
      merged.push_back(a);
    }
  }
  atoms = std::move(merged);
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("DiscreteDistribution: no atoms");
  double total = 0.0;
  double scale = 1.0;
  for (const auto& a : atoms_) {
    if (!(a.p > 0.0) || !std::isfinite(a.x)) {
      throw DomainError("DiscreteDistribution: atoms need p > 0 and finite x");
    }
    total += a.p;
    scale = std::max(scale, a.x * a.x);
  }
  sort_and_merge(atoms_);
  if (std::abs(total - 1.0) > kMomentTol) {
    throw DomainError("DiscreteDistribution: probabilities sum to " + std::to_string(total));
  }
  if (std::abs(mean()) > kMomentTol * std::sqrt(scale)) {
    throw DomainError("DiscreteDistribution: mean is not zero");
  }
  if (std::abs(variance() - 1.0) > kMomentTol * scale) {
    throw DomainError("DiscreteDistribution: variance is not one");
  }
}

DiscreteDistribution DiscreteDistribution::standardized(std::vector<Atom> atoms) {
  double total = 0.0;
  for (const auto& a : atoms) total += a.p;
  double m = 0.0;
  for (auto& a : atoms) {
    a.p /= total;
    m += a.p * a.x;
  }
  double var = 0.0;
  for (const auto& a : atoms) var += a.p * (a.x - m) * (a.x - m);
  if (!(var > 0.0)) throw DomainError("DiscreteDistribution::standardized: degenerate law");
  const double sd = std::sqrt(var);
  for (auto& a : atoms) a.x = (a.x - m) / sd;
  return DiscreteDistribution(std::move(atoms));
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.p * a.x;
  return m;
}

double DiscreteDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (const auto& a : atoms_) v += a.p * (a.x - m) * (a.x - m);
  return v;
}

double DiscreteDistribution::beta3() const {
  double b = 0.0;
  for (const auto& a : atoms_) b += a.p * std::abs(a.x * a.x * a.x);
  return b;
}

DiscreteDistribution two_point(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("two_point: p must lie in (0, 1)");
  const double q = 1.0 - p;
  return DiscreteDistribution({{std::sqrt(q / p), p}, {-std::sqrt(p / q), q}});
}

std::complex<double> cf_exact(const DiscreteDistribution& d, double t) {
  double re = 0.0;
  double im = 0.0;
  for (const auto& a : d.atoms()) {
    re += a.p * std::cos(t * a.x);
    im += a.p * std::sin(t * a.x);
  }
  return {re, im};
}

double fn_abs_exact(const DiscreteDistribution& d, int n, double t) {
  if (n < 1) throw DomainError("fn_abs_exact: n must be >= 1");
  return std::pow(std::abs(cf_exact(d, t / std::sqrt(static_cast<double>(n)))), n);
}

double rn_exact(const DiscreteDistribution& d, int n, double t) {
  if (n < 1) throw DomainError("rn_exact: n must be >= 1");
  const auto f = cf_exact(d, t / std::sqrt(static_cast<double>(n)));
  const auto fn = std::polar(std::pow(std::abs(f), n), n * std::arg(f));
  return std::abs(fn - std::exp(-0.5 * t * t));
}

DiscreteDistribution convolve_n(const DiscreteDistribution& d, int n) {
  if (n < 1) throw DomainError("convolve_n: n must be >= 1");
  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<Atom> out;

  if (d.size() == 2) {
    const auto lo = d.atoms()[0];
    const auto hi = d.atoms()[1];
    const double log_p = std::log(hi.p);
    const double log_q = std::log(lo.p);
    const double log_n_fact = std::lgamma(n + 1.0);
    double total = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double log_prob = log_n_fact - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                              k * log_p + (n - k) * log_q;
      const double prob = std::exp(log_prob);
      if (prob == 0.0) continue;
      out.push_back({(k * hi.x + (n - k) * lo.x) / root_n, prob});
      total += prob;
    }
    for (auto& a : out) a.p /= total;
    return DiscreteDistribution(std::move(out));
  }

  if (std::pow(static_cast<double>(d.size()), n) > kMaxConvolutionSupport) {
    throw TooLarge("convolve_n: " + std::to_string(d.size()) + "^" + std::to_string(n) +
                   " atoms exceed the support budget");
  }
  // Work with unnormalised sums; rescale at the end.
  std::vector<Atom> acc(d.atoms().begin(), d.atoms().end());
  for (int step = 1; step < n; ++step) {
    std::vector<Atom> next;
    next.reserve(acc.size() * d.size());
    for (const auto& a : acc) {
      for (const auto& b : d.atoms()) next.push_back({a.x + b.x, a.p * b.p});
    }
    sort_and_merge(next);
    acc = std::move(next);
  }
  double total = 0.0;
  for (const auto& a : acc) total += a.p;
  for (auto& a : acc) {
    a.x /= root_n;
    a.p /= total;
  }
  return DiscreteDistribution(std::move(acc));
}

double delta_n_exact(const DiscreteDistribution& d, int n) {
  const auto law = convolve_n(d, n);
  double below = 0.0;  // F_n(x_j), mass strictly left of x_j
  double sup = 0.0;
  for (const auto& a : law.atoms()) {
    const double phi = std_normal_cdf(a.x);
    const double above = std::min(1.0, below + a.p);  // F_n(x_j+)
    sup = std::max({sup, std::abs(below - phi), std::abs(above - phi)});
    below = above;
  }
  return sup;
}

}  // namespace berry
