#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "berry/cfbounds.hpp"
#include "berry/prawitz.hpp"

namespace berry {

struct OptimizeResult {
  double t0_opt = 0.0;
  double T_opt = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // bound / eps
  bool converged = false;
  BoundBreakdown breakdown;
  int evaluations = 0;
  int failed_evaluations = 0;  // trial points whose quadrature did not converge
};

/// Search box and stopping rule for the (t0, T) minimization.
struct OptimizerOptions {
  int grid = 16;  // cold-start grid is grid x grid
  double t0_min = 1e-3;
  double T_min = 0.5;
  double T_max = 100.0;
  double rel_improvement = 1e-6;
  int max_cycles = 60;
  int probes = 5;           // probe points per local 1-D search
  double axis_tol = 1e-5;   // golden-section tolerance on t0 and on log T
};

using BoundFn = std::function<BoundBreakdown(const SmoothingParams&)>;

/// Coordinate descent over t0 and log T. Without a seed the best cell of a
/// coarse grid starts the descent; with a seed the descent starts there.
/// Each cycle runs a safeguarded 1-D search in t0, then in log T, inside a
/// window around the current point. converged means the last full cycle
/// improved the ratio by less than rel_improvement (relative). Trial points
/// whose quadrature fails count as +inf; the final point is re-evaluated and
/// a NonConvergence there propagates.
OptimizeResult minimize_bound(const BoundFn& bound, double eps,
                              std::optional<SmoothingParams> init = std::nullopt,
                              const OptimizerOptions& opts = {});

OptimizeResult optimize_t0_T(const ProblemPoint& p,
                             std::optional<SmoothingParams> init = std::nullopt,
                             const OptimizerOptions& opts = {});

enum class CellStatus { Ok, Unconverged, CitedSmallEll, VacuousByLemma4 };

std::string to_string(CellStatus s);
CellStatus parse_cell_status(const std::string& s);

/// One evaluated (eps, n) pair. The tail cell stands for every n > n_max and
/// carries n = n_max + 1. Vacuous cells stand for every n and carry n = 0.
struct SweepCell {
  double eps = 0.0;
  int n = 0;
  bool tail = false;
  CellStatus status = CellStatus::Ok;
  OptimizeResult result;
};

struct SweepConfig {
  double shift = 0.429;
  double target = 0.3328;
  double eps_min = 0.45;
  double eps_max = 0.0;  // <= 0: brr_bound / target
  int eps_steps = 60;
  int n_max = 500;
  double ell_threshold = 0.0357;

  static SweepConfig theorem1();
  static SweepConfig theorem2();

  /// eps_max with the default resolved.
  double resolved_eps_max() const;
  /// Past this eps the claim follows from the Bhattacharya-Ranga Rao bound.
  double lemma4_cut() const;
  std::vector<double> grid() const;
  void validate() const;
};

struct SupOverN {
  int n_star = 0;
  OptimizeResult worst;
  std::vector<SweepCell> cells;  // ordered by n, tail last
};

/// Supremum over n of the optimized ratio at fixed eps.
///
/// n runs from 1 to n_max. n with lyap = eps - shift/sqrt n <= 0 are
/// skipped; lyap <= ell_threshold gives a cited-small-ell cell; beta3 < 1 is
/// not attained by any distribution and is skipped. Every other n is
/// optimized, seeded from the previous n. If admissible n > n_max exist the
/// tail envelope is optimized as one extra cell; TailNotDominated is thrown
/// when it exceeds the enumerated maximum. Past the upper cut a single
/// vacuous cell is returned.
SupOverN sup_over_n(double eps, const SweepConfig& cfg);

struct SweepReport {
  SweepConfig config;
  std::vector<SweepCell> cells;  // ordered by (eps index, n)
  double max_ratio = 0.0;
  double argmax_eps = 0.0;
  int argmax_n = 0;
  /// max over grid points i of (largest bound at eps_i) / eps_{i-1}: covers
  /// every eps of the subinterval via monotonicity of the bound in eps.
  double interval_ratio = 0.0;
  bool certified = false;
  bool vacuous = false;  // no computed cell at all
  int cited_cells = 0;
  int unconverged_cells = 0;
  std::vector<std::string> errors;
};

/// OpenMP sweep; rows (one eps each) are distributed over threads and merged
/// in grid order, so the report does not depend on the thread count.
/// threads <= 0 uses the OpenMP default.
SweepReport sweep(const SweepConfig& cfg, int threads = 0);

/// Single-threaded reference with the same row kernel.
SweepReport sweep_serial(const SweepConfig& cfg);

}  // namespace berry
