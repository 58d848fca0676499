#include <omp.h>

#include <cmath>
#include <limits>

#include "berry/optimizer.hpp"
#include "sweep_row.hpp"

namespace berry {
namespace {

SweepReport merge(const SweepConfig& cfg, const std::vector<double>& grid,
                  std::vector<detail::Row>& rows) {
  SweepReport rep;
  rep.config = cfg;
  rep.max_ratio = -std::numeric_limits<double>::infinity();
  rep.interval_ratio = rep.max_ratio;
  bool any_computed = false;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].error.empty()) rep.errors.push_back(rows[i].error);
    double row_bound = -std::numeric_limits<double>::infinity();
    for (auto& c : rows[i].cells) {
      if (c.status == CellStatus::CitedSmallEll) {
        ++rep.cited_cells;
      } else {
        if (c.status == CellStatus::Unconverged) ++rep.unconverged_cells;
        if (c.status != CellStatus::VacuousByLemma4) any_computed = true;
        if (c.result.ratio > rep.max_ratio || std::isnan(c.result.ratio)) {
          rep.max_ratio = c.result.ratio;
          rep.argmax_eps = c.eps;
          rep.argmax_n = c.n;
        }
        row_bound = std::max(row_bound, c.result.bound);
      }
      rep.cells.push_back(std::move(c));
    }
    const double left = i == 0 ? grid[0] : grid[i - 1];
    rep.interval_ratio = std::max(rep.interval_ratio, row_bound / left);
  }

  rep.vacuous = !any_computed;
  if (rep.vacuous) {
    rep.max_ratio = 0.0;
    rep.interval_ratio = 0.0;
  }
  rep.certified = rep.errors.empty() && rep.unconverged_cells == 0 && rep.max_ratio <= cfg.target;
  return rep;
}

}  // namespace

SweepReport sweep(const SweepConfig& cfg, int threads) {
  cfg.validate();
  const auto grid = cfg.grid();
  std::vector<detail::Row> rows(grid.size());
  const int count = static_cast<int>(grid.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();

  // Rows are independent; within a row each n is seeded from n - 1, so a row
  // is the unit of work.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (int i = 0; i < count; ++i) {
    rows[i] = detail::evaluate_row(grid[i], cfg);
  }
  return merge(cfg, grid, rows);
}

SweepReport sweep_serial(const SweepConfig& cfg) {
  cfg.validate();
  const auto grid = cfg.grid();
  std::vector<detail::Row> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = detail::evaluate_row(grid[i], cfg);
  return merge(cfg, grid, rows);
}

}  // namespace berry
