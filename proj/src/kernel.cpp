#include "berry/kernel.hpp"

#include <cmath>
#include <numbers>

#include "berry/errors.hpp"

namespace berry {
namespace {

constexpr double kPi = std::numbers::pi;

// (1 - t) cot(pi t) for 0 < t <= 1. Past t = 1/2 the argument is reflected
// so that sin(pi (1 - t)) keeps full relative accuracy; at t = 1 the value is
// the limit -1/pi.
double damped_cot(double t) {
  if (t <= 0.5) return (1.0 - t) * std::cos(kPi * t) / std::sin(kPi * t);
  const double s = 1.0 - t;
  if (s == 0.0) return -1.0 / kPi;
  return -std::cos(kPi * s) * s / std::sin(kPi * s);
}

// cot(pi t) - 1/(pi t), Laurent tail. Truncation error below 1e-17 for
// t < kKernelSeriesSwitch.
double cot_pole_free(double t) {
  const double x = kPi * t;
  const double x2 = x * x;
  return -x * (1.0 / 3.0 + x2 * (1.0 / 45.0 + x2 * (2.0 / 945.0 + x2 * (1.0 / 4725.0))));
}

void check_unit_interval(double t, const char* who) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError(std::string(who) + ": t must lie in (0, 1]");
}

}  // namespace

KernelValue kernel_K(double t) {
  const double a = std::abs(t);
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("kernel_K: need 0 < |t| <= 1");
  const double re = 0.5 * (1.0 - a);
  const double im = 0.5 * (damped_cot(a) + 1.0 / kPi);
  return {re, t > 0.0 ? im : -im};
}

double kernel_K_abs(double t) {
  check_unit_interval(t, "kernel_K_abs");
  return std::abs(kernel_K(t));
}

double kernel_K_depoled_abs(double t) {
  check_unit_interval(t, "kernel_K_depoled_abs");
  const double re = 0.5 * (1.0 - t);
  double im;
  if (t < kKernelSeriesSwitch) {
    im = 0.5 * (1.0 - t) * cot_pole_free(t);
  } else {
    im = 0.5 * (damped_cot(t) + 1.0 / kPi) - 1.0 / (2.0 * kPi * t);
  }
  return std::hypot(re, im);
}

}  // namespace berry
