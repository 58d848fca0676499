#include "berry/constants.hpp"

#include <cmath>
#include <numbers>

#include "berry/specfun.hpp"

namespace berry {

double theta0_equation(double theta) {
  return theta * theta + 2.0 * theta * std::sin(theta) + 6.0 * (std::cos(theta) - 1.0);
}

double compute_theta0() {
  Tolerance tol;
  tol.abs_tol = 1e-15;
  return find_root_bisect(theta0_equation, std::numbers::pi, 2.0 * std::numbers::pi, tol).root;
}

double compute_kappa() {
  const double th = compute_theta0();
  return (std::cos(th) - 1.0 + 0.5 * th * th) / (th * th * th);
}

double compute_esseen_lower() {
  return (std::sqrt(10.0) + 3.0) / (6.0 * std::sqrt(2.0 * std::numbers::pi));
}

double compute_brr_bound() {
  // The objective starts at 1/2, rises, and decays to 0; the maximizer is
  // well inside [0, 10].
  auto neg = [](double x) { return -(std_normal_cdf(x) - x * x / (1.0 + x * x)); };
  Tolerance tol;
  tol.abs_tol = 1e-10;
  return -minimize_1d(neg, 0.0, 10.0, tol).min;
}

const PaperConstants& paper_constants() {
  static const PaperConstants constants{
      compute_theta0(), compute_kappa(), compute_esseen_lower(), compute_brr_bound()};
  return constants;
}

}  // namespace berry
