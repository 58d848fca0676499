#include "berry/optimizer.hpp"

#include <cmath>
#include <limits>

#include "berry/constants.hpp"
#include "berry/errors.hpp"
#include "berry/specfun.hpp"
#include "sweep_row.hpp"

namespace berry {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tracks every evaluation and keeps the best one, so the descent can never
// return a point worse than anything it has seen.
class Tracker {
 public:
  Tracker(const BoundFn& bound, double eps) : bound_(bound), eps_(eps) {}

  double operator()(double t0, double log_T) {
    ++evaluations_;
    BoundBreakdown b;
    try {
      b = bound_({t0, std::exp(log_T)});
    } catch (const NonConvergence&) {
      ++failed_;
      return kInf;
    }
    const double ratio = b.total / eps_;
    if (ratio < best_ratio_) {
      best_ratio_ = ratio;
      best_t0_ = t0;
      best_log_T_ = log_T;
      best_ = b;
    }
    return ratio;
  }

  double best_ratio() const { return best_ratio_; }
  double best_t0() const { return best_t0_; }
  double best_log_T() const { return best_log_T_; }
  const BoundBreakdown& best() const { return best_; }
  int evaluations() const { return evaluations_; }
  int failed() const { return failed_; }

 private:
  const BoundFn& bound_;
  double eps_;
  double best_ratio_ = kInf;
  double best_t0_ = 0.0;
  double best_log_T_ = 0.0;
  BoundBreakdown best_;
  int evaluations_ = 0;
  int failed_ = 0;
};

}  // namespace

OptimizeResult minimize_bound(const BoundFn& bound, double eps,
                              std::optional<SmoothingParams> init, const OptimizerOptions& opts) {
  if (!(eps > 0.0)) throw DomainError("minimize_bound: eps must be positive");
  const double log_lo = std::log(opts.T_min);
  const double log_hi = std::log(opts.T_max);
  Tracker track(bound, eps);

  double t0_window;
  double log_window;
  if (init) {
    init->validate();
    track(std::clamp(init->t0, opts.t0_min, 1.0), std::clamp(std::log(init->T), log_lo, log_hi));
    t0_window = 0.02;
    log_window = 0.05;
  } else {
    const int g = opts.grid;
    const double log_step = (log_hi - log_lo) / (g - 1);
    for (int i = 0; i < g; ++i) {
      const double t0 = (i + 0.5) / g;
      for (int j = 0; j < g; ++j) track(t0, log_lo + j * log_step);
    }
    t0_window = 1.0 / g;
    log_window = log_step;
  }
  if (!std::isfinite(track.best_ratio())) {
    throw NonConvergence("minimize_bound: no starting point with a converged bound", kInf, kInf);
  }

  Tolerance axis;
  axis.abs_tol = opts.axis_tol;
  axis.rel_tol = 1e-12;
  constexpr double kMinT0Window = 4e-3;
  constexpr double kMinLogWindow = 1e-2;

  bool converged = false;
  for (int cycle = 0; cycle < opts.max_cycles; ++cycle) {
    const double before = track.best_ratio();
    bool hit_edge = false;

    {
      const double c = track.best_t0();
      const double log_T = track.best_log_T();
      const double lo = std::max(opts.t0_min, c - t0_window);
      const double hi = std::min(1.0, c + t0_window);
      const auto m = minimize_1d([&](double t0) { return track(t0, log_T); }, lo, hi, axis,
                                 opts.probes);
      hit_edge |= (m.argmin == lo && lo > opts.t0_min) || (m.argmin == hi && hi < 1.0);
    }
    {
      const double c = track.best_log_T();
      const double t0 = track.best_t0();
      const double lo = std::max(log_lo, c - log_window);
      const double hi = std::min(log_hi, c + log_window);
      const auto m = minimize_1d([&](double log_T) { return track(t0, log_T); }, lo, hi, axis,
                                 opts.probes);
      hit_edge |= (m.argmin == lo && lo > log_lo) || (m.argmin == hi && hi < log_hi);
    }

    const double gain = before - track.best_ratio();
    if (hit_edge) {
      t0_window *= 2.0;
      log_window *= 2.0;
    } else {
      t0_window = std::max(0.5 * t0_window, kMinT0Window);
      log_window = std::max(0.5 * log_window, kMinLogWindow);
      if (gain <= opts.rel_improvement * track.best_ratio()) {
        converged = true;
        break;
      }
    }
  }

  OptimizeResult r;
  r.t0_opt = track.best_t0();
  r.T_opt = std::exp(track.best_log_T());
  r.breakdown = track.best();
  r.bound = r.breakdown.total;
  r.ratio = r.bound / eps;
  r.converged = converged;
  r.evaluations = track.evaluations();
  r.failed_evaluations = track.failed();
  return r;
}

OptimizeResult optimize_t0_T(const ProblemPoint& p, std::optional<SmoothingParams> init,
                             const OptimizerOptions& opts) {
  const Majorants m(p);
  const BoundFn bound = [&m](const SmoothingParams& s) { return prawitz_bound(m, s); };
  return minimize_bound(bound, p.eps, init, opts);
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Ok:
      return "ok";
    case CellStatus::Unconverged:
      return "unconverged";
    case CellStatus::CitedSmallEll:
      return "cited-small-ell";
    case CellStatus::VacuousByLemma4:
      return "vacuous-by-lemma4";
  }
  return "ok";
}

CellStatus parse_cell_status(const std::string& s) {
  if (s == "ok") return CellStatus::Ok;
  if (s == "unconverged") return CellStatus::Unconverged;
  if (s == "cited-small-ell") return CellStatus::CitedSmallEll;
  if (s == "vacuous-by-lemma4") return CellStatus::VacuousByLemma4;
  throw DomainError("unknown cell status '" + s + "'");
}

SweepConfig SweepConfig::theorem1() {
  SweepConfig c;
  c.shift = 0.429;
  c.target = 0.3328;
  c.eps_min = 0.45;
  c.eps_max = 1.63;
  c.eps_steps = 60;
  c.n_max = 200;
  c.ell_threshold = 0.0357;
  return c;
}

SweepConfig SweepConfig::theorem2() {
  SweepConfig c = theorem1();
  c.shift = 0.415;
  c.target = 0.33554;
  c.ell_threshold = 0.0353;
  return c;
}

double SweepConfig::lemma4_cut() const { return paper_constants().brr_bound / target; }

double SweepConfig::resolved_eps_max() const { return eps_max > 0.0 ? eps_max : lemma4_cut(); }

std::vector<double> SweepConfig::grid() const {
  const double hi = resolved_eps_max();
  std::vector<double> g(eps_steps);
  for (int i = 0; i < eps_steps; ++i) {
    g[i] = i == eps_steps - 1 ? hi : eps_min + (hi - eps_min) * i / (eps_steps - 1);
  }
  return g;
}

void SweepConfig::validate() const {
  if (!(eps_min > 0.0)) throw DomainError("SweepConfig: eps_min must be positive");
  if (!(resolved_eps_max() > eps_min)) throw DomainError("SweepConfig: need eps_max > eps_min");
  if (eps_steps < 2) throw DomainError("SweepConfig: eps_steps must be >= 2");
  if (n_max < 1) throw DomainError("SweepConfig: n_max must be >= 1");
  if (!(shift > 0.0 && shift < 1.0)) throw DomainError("SweepConfig: shift must lie in (0, 1)");
  if (!(target > 0.0)) throw DomainError("SweepConfig: target must be positive");
  if (!(ell_threshold >= 0.0)) throw DomainError("SweepConfig: ell_threshold must be >= 0");
}

namespace detail {

Row evaluate_row(double eps, const SweepConfig& cfg) {
  Row row;
  if (eps > cfg.lemma4_cut()) {
    SweepCell c;
    c.eps = eps;
    c.n = 0;
    c.status = CellStatus::VacuousByLemma4;
    c.result.bound = paper_constants().brr_bound;
    c.result.ratio = c.result.bound / eps;
    c.result.converged = true;
    row.cells.push_back(c);
    return row;
  }

  std::optional<SmoothingParams> seed;
  double enumerated_max = -kInf;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const double root_n = std::sqrt(static_cast<double>(n));
    const double ell = eps - cfg.shift / root_n;
    if (ell <= 0.0) continue;
    SweepCell c;
    c.eps = eps;
    c.n = n;
    if (ell <= cfg.ell_threshold) {
      c.status = CellStatus::CitedSmallEll;
      row.cells.push_back(c);
      continue;
    }
    if (ell * root_n < 1.0) continue;  // beta3 < 1: no distribution in F3

    const auto p = ProblemPoint::from_eps(n, eps, cfg.shift);
    try {
      c.result = optimize_t0_T(p, seed);
      c.status = c.result.converged ? CellStatus::Ok : CellStatus::Unconverged;
      seed = SmoothingParams{c.result.t0_opt, c.result.T_opt};
      enumerated_max = std::max(enumerated_max, c.result.ratio);
    } catch (const NumericError& e) {
      c.status = CellStatus::Unconverged;
      c.result.ratio = kInf;
      c.result.bound = kInf;
      row.error = "eps=" + std::to_string(eps) + " n=" + std::to_string(n) + ": " + e.what();
    }
    row.cells.push_back(c);
  }

  SweepCell tail;
  tail.eps = eps;
  tail.n = cfg.n_max + 1;
  tail.tail = true;
  const TailEnvelope env(eps, cfg.shift, cfg.n_max + 1);
  const BoundFn bound = [&env](const SmoothingParams& s) { return prawitz_bound_tail(env, s); };
  try {
    tail.result = minimize_bound(bound, eps, seed);
    tail.status = tail.result.converged ? CellStatus::Ok : CellStatus::Unconverged;
    row.tail_ratio = tail.result.ratio;
    if (std::isfinite(enumerated_max) && tail.result.ratio > enumerated_max && row.error.empty()) {
      row.tail_not_dominated = true;
      row.error = "eps=" + std::to_string(eps) + ": tail envelope ratio " +
                  std::to_string(tail.result.ratio) + " exceeds the enumerated maximum " +
                  std::to_string(enumerated_max) + "; raise n_max";
    }
  } catch (const NumericError& e) {
    tail.status = CellStatus::Unconverged;
    tail.result.ratio = kInf;
    tail.result.bound = kInf;
    row.error = "eps=" + std::to_string(eps) + " tail: " + e.what();
  }
  row.cells.push_back(tail);
  return row;
}

}  // namespace detail

SupOverN sup_over_n(double eps, const SweepConfig& cfg) {
  cfg.validate();
  auto row = detail::evaluate_row(eps, cfg);
  if (!row.error.empty()) {
    if (row.tail_not_dominated) {
      throw TailNotDominated(row.error, eps, row.tail_ratio);
    }
    throw NonConvergence(row.error, kInf, kInf);
  }
  SupOverN out;
  double worst = -kInf;
  for (const auto& c : row.cells) {
    if (c.status == CellStatus::CitedSmallEll) continue;
    if (c.result.ratio > worst) {
      worst = c.result.ratio;
      out.n_star = c.n;
      out.worst = c.result;
    }
  }
  out.cells = std::move(row.cells);
  return out;
}

}  // namespace berry
