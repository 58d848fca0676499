#pragma once

namespace berry {

/// Constants entering the characteristic-function majorants and the
/// sweep limits. All are computed from their defining equations.
struct PaperConstants {
  double theta0;        // root of th^2 + 2 th sin th + 6 (cos th - 1) on [pi, 2 pi]
  double kappa;         // sup_{x>0} x^-3 |cos x - 1 + x^2/2|
  double esseen_lower;  // (sqrt 10 + 3) / (6 sqrt(2 pi)), lower bound for C0
  double brr_bound;     // sup_{x>0} { Phi(x) - x^2/(1+x^2) }
};

/// Left-hand side of the theta0 equation.
double theta0_equation(double theta);

double compute_theta0();
double compute_kappa();
double compute_esseen_lower();
double compute_brr_bound();

/// Computed on first use, immutable afterwards.
const PaperConstants& paper_constants();

}  // namespace berry
