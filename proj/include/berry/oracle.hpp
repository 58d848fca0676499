#pragma once

#include <complex>
#include <span>
#include <vector>

namespace berry {

struct Atom {
  double x;
  double p;
};

/// Finite distribution with zero mean and unit variance. Atoms are kept
/// sorted by location.
class DiscreteDistribution {
 public:
  /// Throws DomainError unless every p > 0, sum p = 1, mean 0 and
  /// variance 1 (all within 1e-12).
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  /// Centres and rescales arbitrary atoms to zero mean and unit variance.
  static DiscreteDistribution standardized(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double mean() const;
  double variance() const;
  double beta3() const;

 private:
  std::vector<Atom> atoms_;
};

/// sqrt(q/p) with probability p and -sqrt(p/q) with probability q = 1 - p.
DiscreteDistribution two_point(double p);

/// f(t) = sum_j p_j e^{i t x_j}.
std::complex<double> cf_exact(const DiscreteDistribution& d, double t);

/// |f_n(t)| = |f(t/sqrt n)|^n.
double fn_abs_exact(const DiscreteDistribution& d, int n, double t);

/// r_n(t) = |f(t/sqrt n)^n - e^{-t^2/2}|.
double rn_exact(const DiscreteDistribution& d, int n, double t);

/// Support limit for convolve_n on distributions with more than two atoms.
inline constexpr double kMaxConvolutionSupport = 1e6;

/// Law of (X_1 + ... + X_n)/sqrt(n). Two-point laws use the binomial
/// formula; otherwise |atoms|^n must not exceed kMaxConvolutionSupport
/// (TooLarge). Sums closer than 1e-12 are merged.
DiscreteDistribution convolve_n(const DiscreteDistribution& d, int n);

/// sup_x |F_n(x) - Phi(x)| for the left-continuous F_n. The supremum over a
/// purely atomic F_n sits at an atom, approached from either side.
double delta_n_exact(const DiscreteDistribution& d, int n);

}  // namespace berry
