#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "berry/cfbounds.hpp"
#include "berry/constants.hpp"
#include "berry/errors.hpp"
#include "berry/kernel.hpp"
#include "berry/optimizer.hpp"
#include "berry/oracle.hpp"
#include "berry/prawitz.hpp"
#include "berry/report.hpp"

using namespace berry;

namespace {

constexpr int kUsageError = 2;
constexpr int kNumericError = 1;

// Flags validated after parsing but before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void row(const std::string& name, double value) {
  std::cout << std::left << std::setw(18) << name << sig10(value) << '\n';
}

void row(const std::string& name, const std::string& value) {
  std::cout << std::left << std::setw(18) << name << value << '\n';
}

void print_breakdown(const BoundBreakdown& b, double eps, const std::string& format) {
  if (format == "csv") {
    std::cout << "i1,i2,i3,i4,quad_err,total,eps,ratio\n"
              << sig10(b.i1) << ',' << sig10(b.i2) << ',' << sig10(b.i3) << ',' << sig10(b.i4) << ','
              << sig10(b.quad_err) << ',' << sig10(b.total) << ',' << sig10(eps) << ','
              << sig10(b.total / eps) << '\n';
    return;
  }
  row("i1", b.i1);
  row("i2", b.i2);
  row("i3", b.i3);
  row("i4", b.i4);
  row("quad_err", b.quad_err);
  row("total", b.total);
  row("eps", eps);
  row("ratio", b.total / eps);
}

// "p" gives the standard two-point law; "p,x1,x2" puts mass p at x1 and
// 1 - p at x2, then standardizes.
DiscreteDistribution parse_law(const std::string& spec) {
  std::vector<double> v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--exact-cf: cannot parse '" + item + "'");
    }
  }
  if (v.size() == 1) return two_point(v[0]);
  if (v.size() == 3) {
    if (!(v[0] > 0.0 && v[0] < 1.0) || v[1] == v[2]) {
      throw UsageError("--exact-cf: need 0 < p < 1 and x1 != x2");
    }
    return DiscreteDistribution::standardized({{v[1], v[0]}, {v[2], 1.0 - v[0]}});
  }
  throw UsageError("--exact-cf expects p or p,x1,x2");
}

struct SweepFlags {
  SweepConfig cfg;
  int threads = 0;
  std::string out;
  bool no_timestamp = false;
};

int write_report(const SweepReport& rep, const SweepFlags& f) {
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) throw UsageError("cannot open '" + f.out + "' for writing");
    write_sweep_csv(file, rep, !f.no_timestamp);
  }
  std::cout << summarize(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimized Berry-Esseen bounds via the Prawitz smoothing inequality"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* constants = app.add_subcommand("constants", "theta0, kappa, Esseen lower bound, BRR bound");

  double kernel_t = 0.5;
  auto* kernel = app.add_subcommand("kernel", "Prawitz kernel K(t)");
  kernel->add_option("--t", kernel_t, "point in (0, 1]")->required();

  int n = 4;
  double beta3 = 1.284;
  double shift = 0.429;
  double t = 1.0;
  auto* cf = app.add_subcommand("cf-bounds", "all characteristic-function majorants at one point");
  cf->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  cf->add_option("--beta3", beta3)->required();
  cf->add_option("--t", t)->required();
  cf->add_option("--shift", shift, "shift of the eps parametrization")->capture_default_str();

  SmoothingParams params{0.398, 5.451};
  std::string exact_cf;
  std::string format = "table";
  auto* bound = app.add_subcommand("bound", "Prawitz bound breakdown at fixed (t0, T)");
  bound->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bound->add_option("--beta3", beta3, "ignored with --exact-cf");
  bound->add_option("--shift", shift)->capture_default_str();
  bound->add_option("--t0", params.t0)->required();
  bound->add_option("--T", params.T)->required();
  bound->add_option("--exact-cf", exact_cf, "use the exact cf of a law: p or p,x1,x2");
  bound->add_option("--format", format)->check(CLI::IsMember({"table", "csv"}));

  std::optional<double> seed_t0;
  std::optional<double> seed_T;
  auto* optimize = app.add_subcommand("optimize", "minimize the bound over (t0, T)");
  optimize->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  optimize->add_option("--beta3", beta3)->required();
  optimize->add_option("--shift", shift)->capture_default_str();
  optimize->add_option("--t0", seed_t0, "seed t0 (default: coarse grid)");
  optimize->add_option("--T", seed_T, "seed T (default: coarse grid)");

  SweepFlags sf;
  sf.cfg = SweepConfig::theorem1();
  sf.cfg.eps_max = 0.0;
  auto* sweep_cmd = app.add_subcommand("sweep", "certification sweep over an eps grid");
  sweep_cmd->add_option("--shift", sf.cfg.shift)->capture_default_str();
  sweep_cmd->add_option("--target", sf.cfg.target)->capture_default_str();
  sweep_cmd->add_option("--eps-min", sf.cfg.eps_min)->capture_default_str();
  sweep_cmd->add_option("--eps-max", sf.cfg.eps_max, "0 means BRR bound / target")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", sf.cfg.eps_steps)->capture_default_str();
  sweep_cmd->add_option("--n-max", sf.cfg.n_max)->capture_default_str();
  sweep_cmd->add_option("--ell-threshold", sf.cfg.ell_threshold)->capture_default_str();
  sweep_cmd->add_option("--threads", sf.threads, "worker cap (default: all cores)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sf.out, "CSV report path");
  sweep_cmd->add_flag("--no-timestamp", sf.no_timestamp, "omit the timestamp comment line");

  int theorem = 1;
  SweepFlags vf;
  auto* verify = app.add_subcommand("verify", "run a canonical config; exit 0 iff certified");
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2}));
  verify->add_option("--threads", vf.threads)->check(CLI::PositiveNumber);
  verify->add_option("--out", vf.out, "CSV report path");
  verify->add_flag("--no-timestamp", vf.no_timestamp, "omit the timestamp comment line");

  double law_p = 0.3;
  auto* oracle = app.add_subcommand("oracle", "exact Delta_n of a two-point law against the bounds");
  oracle->add_option("--p", law_p)->required();
  oracle->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (constants->parsed()) {
      const auto& c = paper_constants();
      row("theta0", c.theta0);
      row("kappa", c.kappa);
      row("esseen_lower", c.esseen_lower);
      row("brr_bound", c.brr_bound);
      return 0;
    }

    if (kernel->parsed()) {
      if (!(kernel_t != 0.0 && std::abs(kernel_t) <= 1.0)) {
        throw UsageError("--t must satisfy 0 < |t| <= 1");
      }
      const auto k = kernel_K(kernel_t);
      row("t", kernel_t);
      row("re K", k.real());
      row("im K", k.imag());
      row("|K|", kernel_K_abs(kernel_t));
      row("|K - i/(2 pi t)|", kernel_K_depoled_abs(kernel_t));
      return 0;
    }

    if (cf->parsed()) {
      const auto p = ProblemPoint::from_beta3(n, beta3, shift);
      const Majorants m(p);
      row("lyap", p.lyap);
      row("eps", p.eps);
      row("psi(t, lyap)", psi(t, p.lyap));
      row("|f_n| shifted", fn_abs_majorant(t, p, MajorantKind::ShiftedPsi));
      if (std::abs(t) <= 0.5 * M_PI * std::sqrt(static_cast<double>(n))) {
        row("|f_n| cos-sin", fn_abs_majorant(t, p, MajorantKind::CosSinSplit));
      } else {
        row("|f_n| cos-sin", "n/a (|t| > (pi/2) sqrt n)");
      }
      row("|f_n| min", m.abs_fn(t));
      row("r_n integral", m.rn_integral(t));
      row("r_n telescoping", m.rn_telescoping(t));
      row("r_n bound", m.rn(t));
      return 0;
    }

    if (bound->parsed()) {
      params.validate();
      if (!exact_cf.empty()) {
        const auto d = parse_law(exact_cf);
        const double eps = (d.beta3() + shift) / std::sqrt(static_cast<double>(n));
        if (format == "table") row("beta3", d.beta3());
        print_breakdown(prawitz_bound_exact_cf(d, n, params), eps, format);
      } else {
        const auto p = ProblemPoint::from_beta3(n, beta3, shift);
        print_breakdown(prawitz_bound(p, params), p.eps, format);
      }
      return 0;
    }

    if (optimize->parsed()) {
      if (seed_t0.has_value() != seed_T.has_value()) {
        throw UsageError("--t0 and --T must be given together");
      }
      std::optional<SmoothingParams> seed;
      if (seed_t0) seed = SmoothingParams{*seed_t0, *seed_T};
      const auto p = ProblemPoint::from_beta3(n, beta3, shift);
      const auto r = optimize_t0_T(p, seed);
      row("t0_opt", r.t0_opt);
      row("T_opt", r.T_opt);
      print_breakdown(r.breakdown, p.eps, "table");
      row("converged", r.converged ? "yes" : "no");
      row("evaluations", std::to_string(r.evaluations));
      return r.converged ? 0 : kNumericError;
    }

    if (sweep_cmd->parsed()) {
      sf.cfg.validate();
      const auto rep = sweep(sf.cfg, sf.threads);
      write_report(rep, sf);
      return rep.errors.empty() ? 0 : kNumericError;
    }

    if (verify->parsed()) {
      vf.cfg = theorem == 1 ? SweepConfig::theorem1() : SweepConfig::theorem2();
      const auto rep = sweep(vf.cfg, vf.threads);
      write_report(rep, vf);
      if (rep.certified) std::cout << headline_derivation(vf.cfg);
      return rep.certified ? 0 : kNumericError;
    }

    if (oracle->parsed()) {
      const auto d = two_point(law_p);
      const double root_n = std::sqrt(static_cast<double>(n));
      const auto t1 = SweepConfig::theorem1();
      const auto t2 = SweepConfig::theorem2();
      const double eps = (d.beta3() + t1.shift) / root_n;
      const BoundFn exact = [&](const SmoothingParams& s) {
        return prawitz_bound_exact_cf(d, n, s);
      };
      const auto via_exact = minimize_bound(exact, eps);
      const auto via_majorants = optimize_t0_T(ProblemPoint::from_beta3(n, d.beta3(), t1.shift));
      row("beta3", d.beta3());
      row("Delta_n exact", delta_n_exact(d, n));
      row("theorem 1 bound", t1.target * (d.beta3() + t1.shift) / root_n);
      row("theorem 2 bound", t2.target * (d.beta3() + t2.shift) / root_n);
      row("prawitz exact cf", via_exact.bound);
      row("prawitz majorant", via_majorants.bound);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericError;
  }
  return kUsageError;
}
