#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "berry/optimizer.hpp"

namespace berry {

inline constexpr const char* kVersion = "1.0.0";

/// eps,n,t0_opt,T_opt,i1,i2,i3,i4,quad_err,ratio,status
std::string csv_header();

/// Shortest decimal that parses back to the same double.
std::string exact_decimal(double x);

/// Ten significant digits, for human-readable output.
std::string sig10(double x);

/// One line describing every field of the config.
std::string describe(const SweepConfig& cfg);

/// Comment lines (config, version, optional timestamp), the header row,
/// then one row per cell in report order.
void write_sweep_csv(std::ostream& out, const SweepReport& rep, bool timestamp = true);

/// Human-readable verdict: max ratio, argmax cell, scope counts, the eps
/// cut above which the claim holds automatically, and any cell errors.
std::string summarize(const SweepReport& rep);

/// The headline constant implied by a certified config: for beta3 >= 1,
/// target (beta3 + shift) <= target (1 + shift) beta3.
struct HeadlineConstant {
  double product = 0.0;  // target * (1 + shift)
  double claimed = 0.0;  // rounded-up constant
};
HeadlineConstant headline_constant(const SweepConfig& cfg);
std::string headline_derivation(const SweepConfig& cfg);

/// Parses rows written by write_sweep_csv; comment lines are skipped.
std::vector<SweepCell> read_sweep_csv(std::istream& in);

}  // namespace berry
