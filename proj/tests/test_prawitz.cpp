#include <doctest.h>

#include <cmath>
#include <numbers>

#include "berry/errors.hpp"
#include "berry/prawitz.hpp"
#include "berry/quadrature.hpp"

using namespace berry;

// Reference values from tests/oracles/derive.py (independent scipy code).
TEST_CASE("bound at the extremal points against the independent implementation") {
  struct Ref {
    int n;
    double beta3, shift, t0, T, i1, i2, i3, i4, target;
  };
  const Ref refs[] = {
      {4, 1.284, 0.429, 0.398, 5.451, 0.0431179311709, 0.041738767753, 0.195320501535,
       0.00481648144862, 0.3328},
      {4, 1.261, 0.415, 0.394, 5.513, 0.0423131950061, 0.0406201856148, 0.193437157979,
       0.00478001405168, 0.33554},
      {6, 1.0, 0.415, 0.317, 7.723, 0.0283298797472, 0.0182571675299, 0.145147275977,
       0.00208513257077, 0.33554},
  };
  for (const auto& r : refs) {
    CAPTURE(r.n);
    CAPTURE(r.beta3);
    const auto p = ProblemPoint::from_beta3(r.n, r.beta3, r.shift);
    const auto b = prawitz_bound(p, {r.t0, r.T});
    CHECK(b.i1 == doctest::Approx(r.i1).epsilon(1e-8));
    CHECK(b.i2 == doctest::Approx(r.i2).epsilon(1e-8));
    CHECK(b.i3 == doctest::Approx(r.i3).epsilon(1e-8));
    CHECK(b.i4 == doctest::Approx(r.i4).epsilon(1e-10));
    CHECK(b.total / p.eps <= r.target + 5e-4);
    CHECK(b.total / p.eps <= r.target);
    CHECK(b.quad_err < 1e-8);
  }
}

TEST_CASE("breakdown is positive and additive") {
  const auto p = ProblemPoint::from_beta3(5, 1.7, 0.429);
  for (double t0 : {0.1, 0.4, 0.9}) {
    for (double T : {2.0, 6.0, 15.0}) {
      const auto b = prawitz_bound(p, {t0, T});
      CHECK(b.i1 >= 0.0);
      CHECK(b.i2 >= 0.0);
      CHECK(b.i3 >= 0.0);
      CHECK(b.i4 > 0.0);
      CHECK(b.quad_err >= 0.0);
      CHECK(b.total == b.i1 + b.i2 + b.i3 + b.i4);
    }
  }
}

TEST_CASE("Gaussian terms decay as T grows") {
  const auto p = ProblemPoint::from_beta3(4, 1.284, 0.429);
  double prev3 = INFINITY;
  double prev4 = INFINITY;
  for (double T : {10.0, 20.0, 40.0}) {
    const auto b = prawitz_bound(p, {0.4, T});
    CHECK(b.i3 < prev3);
    CHECK(b.i4 < prev4);
    prev3 = b.i3;
    prev4 = b.i4;
  }
  CHECK(prev4 < 1e-20);
}

TEST_CASE("last term closed form matches quadrature") {
  for (auto [t0, T] : {std::pair{0.398, 5.451}, std::pair{0.317, 7.723}, std::pair{0.05, 1.0}}) {
    const auto q = integrate_to_infinity(
        [T = T](double t) { return std::exp(-0.5 * T * T * t * t) / t; }, t0);
    CHECK(gaussian_tail_term({t0, T}) == doctest::Approx(q.value / std::numbers::pi).epsilon(1e-10));
  }
}

TEST_CASE("bound is nondecreasing in beta3") {
  for (int n : {2, 4, 9}) {
    double prev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double beta3 = 1.0 + 0.2 * i;
      const auto b = prawitz_bound(ProblemPoint::from_beta3(n, beta3, 0.429), {0.4, 5.5});
      CHECK(b.total >= prev - 1e-12);
      prev = b.total;
    }
  }
}

TEST_CASE("exact characteristic function bound dominates the true distance") {
  struct Case {
    DiscreteDistribution d;
    int n;
  };
  const Case cases[] = {{two_point(0.5), 4}, {two_point(0.3), 2}, {two_point(0.3), 4},
                        {two_point(0.1), 1}};
  for (const auto& c : cases) {
    const double delta = delta_n_exact(c.d, c.n);
    for (double t0 : {0.2, 0.4, 0.7}) {
      for (double T : {3.0, 5.5, 9.0}) {
        const SmoothingParams s{t0, T};
        const auto exact = prawitz_bound_exact_cf(c.d, c.n, s);
        CHECK(delta <= exact.total + exact.quad_err);
        const auto majorant = prawitz_bound(ProblemPoint::from_beta3(c.n, c.d.beta3(), 0.429), s);
        CHECK(exact.total <= majorant.total + 1e-9);
        CHECK(delta <= majorant.total);
      }
    }
  }
}

TEST_CASE("tail bound dominates every n past its floor") {
  const double eps = 0.8565;
  const double shift = 0.429;
  const TailEnvelope env(eps, shift, 41);
  const SmoothingParams s{0.35, 6.0};
  const auto tail = prawitz_bound_tail(env, s);
  for (int n : {41, 45, 80, 300, 3000}) {
    const auto b = prawitz_bound(ProblemPoint::from_eps(n, eps, shift), s);
    CHECK(b.total <= tail.total + 1e-9);
  }
}

TEST_CASE("parameter validation") {
  const auto p = ProblemPoint::from_beta3(4, 1.284, 0.429);
  CHECK_THROWS_AS(prawitz_bound(p, {0.0, 5.0}), DomainError);
  CHECK_THROWS_AS(prawitz_bound(p, {1.5, 5.0}), DomainError);
  CHECK_THROWS_AS(prawitz_bound(p, {0.4, -1.0}), DomainError);
  CHECK_THROWS_AS(prawitz_bound_exact_cf(two_point(0.5), 0, {0.4, 5.0}), DomainError);
  CHECK_NOTHROW(prawitz_bound(p, {1.0, 5.0}));
}
