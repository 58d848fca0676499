#pragma once

#include <complex>

namespace berry {

using KernelValue = std::complex<double>;

/// Below this |t| the cotangent is expanded in its Laurent series so the
/// 1/(pi t) pole cancels exactly in the depoled modulus.
inline constexpr double kKernelSeriesSwitch = 1e-2;

/// Prawitz kernel
///   K(t) = (1 - |t|)/2 + i/2 [ (1 - |t|) cot(pi t) + sign(t)/pi ],  0 < |t| <= 1.
/// The real part is even and the imaginary part odd in t.
KernelValue kernel_K(double t);

/// |K(t)| for 0 < t <= 1. Behaves like 1/(2 pi t) near zero.
double kernel_K_abs(double t);

/// |K(t) - i/(2 pi t)| for 0 < t <= 1; tends to 1/2 as t -> 0+.
double kernel_K_depoled_abs(double t);

}  // namespace berry
