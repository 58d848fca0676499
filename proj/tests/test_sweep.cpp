#include <doctest.h>

#include <cmath>
#include <random>

#include "berry/constants.hpp"
#include "berry/errors.hpp"
#include "berry/optimizer.hpp"

using namespace berry;

namespace {

SweepConfig small_config() {
  SweepConfig c = SweepConfig::theorem1();
  c.eps_min = 0.80;
  c.eps_max = 0.90;
  c.eps_steps = 3;
  c.n_max = 50;
  return c;
}

void check_identical(const SweepReport& a, const SweepReport& b) {
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& x = a.cells[i];
    const auto& y = b.cells[i];
    CHECK(x.eps == y.eps);
    CHECK(x.n == y.n);
    CHECK(x.status == y.status);
    CHECK(x.result.t0_opt == y.result.t0_opt);
    CHECK(x.result.T_opt == y.result.T_opt);
    CHECK(x.result.breakdown.i1 == y.result.breakdown.i1);
    CHECK(x.result.breakdown.i2 == y.result.breakdown.i2);
    CHECK(x.result.breakdown.quad_err == y.result.breakdown.quad_err);
    CHECK(x.result.ratio == y.result.ratio);
  }
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.argmax_eps == b.argmax_eps);
  CHECK(a.argmax_n == b.argmax_n);
  CHECK(a.interval_ratio == b.interval_ratio);
  CHECK(a.certified == b.certified);
}

}  // namespace

TEST_CASE("config defaults and validation") {
  SweepConfig c;
  CHECK(c.n_max == 500);
  CHECK(c.resolved_eps_max() == doctest::Approx(0.54093654 / 0.3328).epsilon(1e-7));
  CHECK(c.lemma4_cut() == doctest::Approx(1.6254).epsilon(1e-4));
  const auto g = c.grid();
  CHECK(g.size() == 60);
  CHECK(g.front() == c.eps_min);
  CHECK(g.back() == c.resolved_eps_max());

  auto bad = c;
  bad.eps_min = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = c;
  bad.eps_steps = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = c;
  bad.n_max = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = c;
  bad.eps_max = 0.3;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("row structure: cited, inadmissible and tail cells") {
  auto cfg = SweepConfig::theorem1();
  cfg.n_max = 150;
  const auto row = sup_over_n(0.43, cfg);
  REQUIRE(!row.cells.empty());
  // n = 1: ell = 0.001 is inside the cited region.
  CHECK(row.cells.front().n == 1);
  CHECK(row.cells.front().status == CellStatus::CitedSmallEll);
  // beta3 >= 1 first holds at n = ((1 + 0.429)/0.43)^2, about 11.04.
  CHECK(row.cells[1].n == 12);
  CHECK(row.cells.back().tail);
  CHECK(row.cells.back().n == 151);
  for (const auto& c : row.cells) {
    if (c.status == CellStatus::CitedSmallEll) continue;
    CHECK(c.result.ratio <= row.worst.ratio);
  }
}

TEST_CASE("worst n at the first extremal eps") {
  auto cfg = SweepConfig::theorem1();
  cfg.n_max = 60;
  const auto row = sup_over_n(0.8565, cfg);
  CHECK(row.n_star == 4);
  CHECK(row.worst.ratio <= 0.3328);
}

TEST_CASE("worst n at the second extremal eps") {
  auto cfg = SweepConfig::theorem2();
  cfg.n_max = 60;
  const auto row = sup_over_n(0.5777, cfg);
  CHECK(row.n_star == 6);
  CHECK(row.worst.ratio <= 0.33554);
}

TEST_CASE("tail that is not dominated is reported") {
  auto cfg = SweepConfig::theorem1();
  cfg.n_max = 3;
  CHECK_THROWS_AS(sup_over_n(0.8565, cfg), TailNotDominated);
  auto rep = sweep_serial([&] {
    auto c = cfg;
    c.eps_min = 0.85;
    c.eps_max = 0.86;
    c.eps_steps = 2;
    return c;
  }());
  CHECK(!rep.certified);
  CHECK(!rep.errors.empty());
}

TEST_CASE("an interval above the upper cut is vacuous") {
  auto cfg = SweepConfig::theorem1();
  cfg.eps_min = 1.7;
  cfg.eps_max = 1.8;
  cfg.eps_steps = 2;
  const auto rep = sweep(cfg);
  REQUIRE(rep.cells.size() == 2);
  for (const auto& c : rep.cells) {
    CHECK(c.status == CellStatus::VacuousByLemma4);
    CHECK(c.n == 0);
  }
  CHECK(rep.vacuous);
  CHECK(rep.certified);
  CHECK(rep.errors.empty());
}

TEST_CASE("sweep is bit-identical across worker counts") {
  const auto cfg = small_config();
  const auto serial = sweep_serial(cfg);
  check_identical(serial, sweep(cfg, 1));
  check_identical(serial, sweep(cfg, 2));
  check_identical(serial, sweep(cfg, 3));
  check_identical(serial, sweep_serial(cfg));
  CHECK(serial.certified);
  CHECK(serial.argmax_n == 4);
  CHECK(serial.max_ratio <= 0.3328);
}

TEST_CASE("report aggregates match the cells") {
  const auto rep = sweep_serial(small_config());
  double worst = -1.0;
  int cited = 0;
  for (const auto& c : rep.cells) {
    if (c.status == CellStatus::CitedSmallEll) {
      ++cited;
      continue;
    }
    CHECK(c.status == CellStatus::Ok);
    worst = std::max(worst, c.result.ratio);
  }
  CHECK(rep.max_ratio == worst);
  CHECK(rep.cited_cells == cited);
  CHECK(rep.unconverged_cells == 0);
  CHECK(rep.interval_ratio >= rep.max_ratio);
}

TEST_CASE("right endpoint dominates its subinterval") {
  const double shift = 0.429;
  const double lo = 0.84;
  const double hi = 0.86;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> inside(lo, hi);
  for (int n : {3, 4, 6}) {
    const auto right = optimize_t0_T(ProblemPoint::from_eps(n, hi, shift));
    const SmoothingParams s{right.t0_opt, right.T_opt};
    for (int k = 0; k < 5; ++k) {
      const double eps = inside(rng);
      // Same parameters: the bound itself is monotone in eps.
      CHECK(prawitz_bound(ProblemPoint::from_eps(n, eps, shift), s).total <= right.bound);
      // Each optimized independently: equal up to the optimizer's tolerance.
      const auto here = optimize_t0_T(ProblemPoint::from_eps(n, eps, shift), s);
      CHECK(here.bound <= right.bound * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("halving the eps step barely moves the maximum") {
  auto coarse = SweepConfig::theorem1();
  coarse.eps_min = 0.80;
  coarse.eps_max = 0.92;
  coarse.eps_steps = 4;
  coarse.n_max = 50;
  auto fine = coarse;
  fine.eps_steps = 7;
  const auto a = sweep(coarse);
  const auto b = sweep(fine);
  CHECK(std::abs(a.max_ratio - b.max_ratio) <= 1e-3);
}
