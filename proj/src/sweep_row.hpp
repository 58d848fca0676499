#pragma once

#include <string>
#include <vector>

#include "berry/optimizer.hpp"

namespace berry::detail {

/// Everything sup_over_n computes at one eps, errors captured instead of
/// thrown so the sweep can keep the row.
struct Row {
  std::vector<SweepCell> cells;
  std::string error;
  bool tail_not_dominated = false;
  double tail_ratio = 0.0;
};

Row evaluate_row(double eps, const SweepConfig& cfg);

}  // namespace berry::detail
