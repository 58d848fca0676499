#include "berry/specfun.hpp"

#include <cmath>
#include <numbers>

namespace berry {

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw DomainError("Tolerance: need abs_tol > 0, rel_tol > 0, max_iter >= 1");
  }
}

// erfc from the C library is accurate to a few ulp over the whole real line,
// including the far tails where 1 - erf would cancel.
double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

// libstdc++ evaluates Ei(-x) = -E1(x) with a series below x = 1 and a
// continued fraction above.
double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("exp_integral_e1: x must be positive");
  if (x > 745.0) return 0.0;
  return -std::expint(-x);
}

}  // namespace berry
