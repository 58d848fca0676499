#include "berry/report.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "berry/constants.hpp"
#include "berry/errors.hpp"

namespace berry {

std::string csv_header() { return "eps,n,t0_opt,T_opt,i1,i2,i3,i4,quad_err,ratio,status"; }

std::string exact_decimal(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string sig10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string describe(const SweepConfig& cfg) {
  std::ostringstream s;
  s << "shift=" << exact_decimal(cfg.shift) << " target=" << exact_decimal(cfg.target)
    << " eps_min=" << exact_decimal(cfg.eps_min)
    << " eps_max=" << exact_decimal(cfg.resolved_eps_max()) << " steps=" << cfg.eps_steps
    << " n_max=" << cfg.n_max << " ell_threshold=" << exact_decimal(cfg.ell_threshold);
  return s.str();
}

void write_sweep_csv(std::ostream& out, const SweepReport& rep, bool timestamp) {
  out << "# berry " << kVersion << " sweep " << describe(rep.config) << '\n';
  out << "# rows with n = n_max+1 bound every n > n_max; n = 0 marks a vacuous eps\n";
  if (timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated " << buf << '\n';
  }
  out << csv_header() << '\n';
  for (const auto& c : rep.cells) {
    const auto& r = c.result;
    const auto& b = r.breakdown;
    out << exact_decimal(c.eps) << ',' << c.n << ',' << exact_decimal(r.t0_opt) << ','
        << exact_decimal(r.T_opt) << ',' << exact_decimal(b.i1) << ',' << exact_decimal(b.i2) << ','
        << exact_decimal(b.i3) << ',' << exact_decimal(b.i4) << ',' << exact_decimal(b.quad_err)
        << ',' << exact_decimal(r.ratio) << ',' << to_string(c.status) << '\n';
  }
}

std::string summarize(const SweepReport& rep) {
  const auto& cfg = rep.config;
  const double brr = paper_constants().brr_bound;
  std::ostringstream s;
  s << "config            " << describe(cfg) << '\n';
  if (rep.vacuous) {
    s << "max ratio         none (no admissible cell; vacuous)\n";
  } else {
    s << "max ratio         " << sig10(rep.max_ratio) << "  (target " << sig10(cfg.target) << ")\n";
    s << "argmax cell       eps = " << sig10(rep.argmax_eps) << ", n = " << rep.argmax_n << '\n';
    s << "interval ratio    " << sig10(rep.interval_ratio)
      << "  (bound at each grid point over the previous grid point)\n";
  }
  s << "cells             " << rep.cells.size() << " (" << rep.cited_cells
    << " cited-small-ell with ell <= " << sig10(cfg.ell_threshold) << " not computed, "
    << rep.unconverged_cells << " unconverged)\n";
  s << "upper eps cut     " << sig10(brr) << " / " << sig10(cfg.target) << " = "
    << sig10(cfg.lemma4_cut()) << "; above it Delta_n <= " << sig10(brr)
    << " <= target * eps\n";
  for (const auto& e : rep.errors) s << "error             " << e << '\n';
  s << "certified         " << (rep.certified ? "yes" : "no") << '\n';
  return s.str();
}

HeadlineConstant headline_constant(const SweepConfig& cfg) {
  HeadlineConstant h;
  h.product = cfg.target * (1.0 + cfg.shift);
  h.claimed = std::ceil(h.product * 1e4) / 1e4;
  return h;
}

std::string headline_derivation(const SweepConfig& cfg) {
  const auto h = headline_constant(cfg);
  std::ostringstream s;
  s << "Delta_n <= " << sig10(cfg.target) << " (beta3 + " << sig10(cfg.shift)
    << ") / sqrt(n) and beta3 >= 1 give Delta_n <= C0 beta3 / sqrt(n) with C0 = "
    << sig10(cfg.target) << " * " << sig10(1.0 + cfg.shift) << " = " << sig10(h.product) << " < "
    << sig10(h.claimed) << '\n';
  return s.str();
}

namespace {

double parse_double(const std::string& field) {
  if (field == "inf") return std::numeric_limits<double>::infinity();
  if (field == "-inf") return -std::numeric_limits<double>::infinity();
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw DomainError("read_sweep_csv: bad number '" + field + "'");
  }
  return v;
}

}  // namespace

std::vector<SweepCell> read_sweep_csv(std::istream& in) {
  std::vector<SweepCell> cells;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != csv_header()) throw DomainError("read_sweep_csv: unexpected header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 11) throw DomainError("read_sweep_csv: expected 11 fields");
    SweepCell c;
    c.eps = parse_double(f[0]);
    c.n = std::stoi(f[1]);
    c.result.t0_opt = parse_double(f[2]);
    c.result.T_opt = parse_double(f[3]);
    auto& b = c.result.breakdown;
    b.i1 = parse_double(f[4]);
    b.i2 = parse_double(f[5]);
    b.i3 = parse_double(f[6]);
    b.i4 = parse_double(f[7]);
    b.quad_err = parse_double(f[8]);
    b.total = b.i1 + b.i2 + b.i3 + b.i4;
    c.result.ratio = parse_double(f[9]);
    c.status = parse_cell_status(f[10]);
    cells.push_back(c);
  }
  return cells;
}

}  // namespace berry
