#include <doctest.h>

#include <limits>
#include <sstream>
#include <string>

#include "berry/errors.hpp"
#include "berry/report.hpp"

using namespace berry;

namespace {

SweepReport sample_report() {
  SweepReport rep;
  rep.config = SweepConfig::theorem1();
  SweepCell a;
  a.eps = 0.85 + 1.0 / 3.0 * 1e-3;
  a.n = 4;
  a.result.t0_opt = 0.39812345678901234;
  a.result.T_opt = 5.4512345678901234;
  a.result.breakdown = {0.1 / 3.0, 0.2 / 7.0, 0.19532050153, 0.0048164814486, 1.3e-9, 0.0};
  auto& b = a.result.breakdown;
  b.total = b.i1 + b.i2 + b.i3 + b.i4;
  a.result.bound = b.total;
  a.result.ratio = b.total / a.eps;
  SweepCell cited;
  cited.eps = 0.45;
  cited.n = 1;
  cited.status = CellStatus::CitedSmallEll;
  SweepCell bad;
  bad.eps = 0.9;
  bad.n = 7;
  bad.status = CellStatus::Unconverged;
  bad.result.ratio = std::numeric_limits<double>::infinity();
  SweepCell vac;
  vac.eps = 1.63;
  vac.n = 0;
  vac.status = CellStatus::VacuousByLemma4;
  vac.result.ratio = 0.54093654154867 / 1.63;
  rep.cells = {a, cited, bad, vac};
  return rep;
}

}  // namespace

TEST_CASE("csv round trip is exact") {
  const auto rep = sample_report();
  std::stringstream ss;
  write_sweep_csv(ss, rep);
  const auto back = read_sweep_csv(ss);
  REQUIRE(back.size() == rep.cells.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto& x = rep.cells[i];
    const auto& y = back[i];
    CHECK(x.eps == y.eps);
    CHECK(x.n == y.n);
    CHECK(x.status == y.status);
    CHECK(x.result.t0_opt == y.result.t0_opt);
    CHECK(x.result.T_opt == y.result.T_opt);
    CHECK(x.result.breakdown.i1 == y.result.breakdown.i1);
    CHECK(x.result.breakdown.i2 == y.result.breakdown.i2);
    CHECK(x.result.breakdown.i3 == y.result.breakdown.i3);
    CHECK(x.result.breakdown.i4 == y.result.breakdown.i4);
    CHECK(x.result.breakdown.quad_err == y.result.breakdown.quad_err);
    CHECK(x.result.ratio == y.result.ratio);
  }
}

TEST_CASE("csv layout") {
  std::stringstream ss;
  write_sweep_csv(ss, sample_report(), false);
  const std::string text = ss.str();
  CHECK(text.rfind("# berry ", 0) == 0);
  CHECK(text.find("shift=0.429") != std::string::npos);
  CHECK(text.find("n_max=200") != std::string::npos);
  CHECK(text.find("# generated") == std::string::npos);
  CHECK(text.find("\n" + csv_header() + "\n") != std::string::npos);
  CHECK(text.find(",cited-small-ell\n") != std::string::npos);
  CHECK(text.find(",vacuous-by-lemma4\n") != std::string::npos);
  CHECK(text.find(",inf,unconverged\n") != std::string::npos);

  std::stringstream stamped;
  write_sweep_csv(stamped, sample_report(), true);
  CHECK(stamped.str().find("# generated") != std::string::npos);

  std::stringstream again;
  write_sweep_csv(again, sample_report(), false);
  CHECK(again.str() == text);
}

TEST_CASE("csv reader rejects malformed input") {
  std::stringstream wrong_header("a,b,c\n");
  CHECK_THROWS_AS(read_sweep_csv(wrong_header), DomainError);
  std::stringstream short_row(csv_header() + "\n1,2,3\n");
  CHECK_THROWS_AS(read_sweep_csv(short_row), DomainError);
  std::stringstream bad_number(csv_header() + "\n0.5,4,x,1,1,1,1,1,1,1,ok\n");
  CHECK_THROWS_AS(read_sweep_csv(bad_number), DomainError);
}

TEST_CASE("number formatting") {
  CHECK(sig10(0.332742185532) == "0.3327421855");
  CHECK(sig10(3.9958956790778861) == "3.995895679");
  CHECK(exact_decimal(0.1) == "0.1");
  CHECK(std::stod(exact_decimal(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("headline constants") {
  const auto a = headline_constant(SweepConfig::theorem1());
  CHECK(a.product == doctest::Approx(0.4755712));
  CHECK(a.claimed == doctest::Approx(0.4756));
  CHECK(a.product < a.claimed);
  const auto b = headline_constant(SweepConfig::theorem2());
  CHECK(b.product == doctest::Approx(0.4747891));
  CHECK(b.claimed == doctest::Approx(0.4748));
  CHECK(headline_derivation(SweepConfig::theorem2()).find("< 0.4748") != std::string::npos);
}

TEST_CASE("summary states scope and verdict") {
  auto rep = sample_report();
  rep.cited_cells = 1;
  rep.certified = false;
  rep.errors = {"eps=0.9 n=7: synthetic"};
  const auto s = summarize(rep);
  CHECK(s.find("cited-small-ell") != std::string::npos);
  CHECK(s.find("certified         no") != std::string::npos);
  CHECK(s.find("eps=0.9 n=7") != std::string::npos);
  CHECK(s.find("1.625") != std::string::npos);
}
