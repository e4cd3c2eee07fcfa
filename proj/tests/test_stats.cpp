#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wsnsense/errors.hpp"
#include "wsnsense/rng.hpp"
#include "wsnsense/stats.hpp"

using wsnsense::Series;

namespace {

Series make(std::initializer_list<double> values) {
  return Series::from(std::vector<double>(values));
}

}  // namespace

TEST_CASE("linear correlation on hand-derived values") {
  CHECK(wsnsense::linear_corr(make({1, 2, 3}), make({2, 4, 6})) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(wsnsense::linear_corr(make({1, 2, 3}), make({3, 2, 1})) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  // deviations (-1,0,1)x(-1,1,0): numerator 1, denominator sqrt(2)*sqrt(2)
  CHECK(wsnsense::linear_corr(make({1, 2, 3}), make({1, 3, 2})) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("order-2 correlation on hand-derived values") {
  // squared series (1,4,9) vs (1,9,4), means 14/3 -> 69/294
  CHECK(wsnsense::order_m_corr(make({1, 2, 3}), make({1, 3, 2}), 2) ==
        doctest::Approx(69.0 / 294.0).epsilon(1e-13));

  // y = x^2 with x symmetric about 0: linear correlation vanishes while the
  // squared series stay strongly dependent (155/(7*sqrt(505)), not 1: the
  // squares are correlated but not affinely related).
  const Series x = make({-2, -1, 0, 1, 2});
  const Series y = make({4, 1, 0, 1, 4});
  CHECK(std::abs(wsnsense::linear_corr(x, y)) < 1e-14);
  CHECK(wsnsense::order_m_corr(x, y, 2) ==
        doctest::Approx(155.0 / (7.0 * std::sqrt(505.0))).epsilon(1e-13));

  // affinely related squares do reach +1 exactly (after clamping)
  CHECK(wsnsense::order_m_corr(make({1, 2, 3, 4}), make({3, 6, 9, 12}), 2) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("order 1 reduces to the linear correlation") {
  wsnsense::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(20), ys(20);
    for (auto& v : xs) v = rng.uniform_real(-5.0, 5.0);
    for (auto& v : ys) v = rng.uniform_real(-5.0, 5.0);
    const Series x = Series::from(xs);
    const Series y = Series::from(ys);
    CHECK(std::abs(wsnsense::order_m_corr(x, y, 1) -
                   wsnsense::linear_corr(x, y)) <= 1e-15);
  }
}

TEST_CASE("correlations match the direct-summation oracle") {
  wsnsense::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform_int(3, 100));
    std::vector<double> xs(m), ys(m);
    for (auto& v : xs) v = rng.uniform_real(-10.0, 10.0);
    for (auto& v : ys) v = rng.uniform_real(-10.0, 10.0);
    const Series x = Series::from(xs);
    const Series y = Series::from(ys);
    CHECK(wsnsense::linear_corr(x, y) ==
          doctest::Approx(oracles::direct_corr(xs, ys)).epsilon(1e-12));
    CHECK(wsnsense::order_m_corr(x, y, 2) ==
          doctest::Approx(oracles::direct_order_corr(xs, ys, 2))
              .epsilon(1e-12));
  }
}

TEST_CASE("correlation properties") {
  wsnsense::Rng rng(13);
  std::vector<double> xs(40), ys(40);
  for (auto& v : xs) v = rng.uniform_real(0.5, 9.5);
  for (auto& v : ys) v = rng.uniform_real(-4.0, 4.0);
  const Series x = Series::from(xs);
  const Series y = Series::from(ys);

  SUBCASE("symmetry") {
    CHECK(wsnsense::linear_corr(x, y) == wsnsense::linear_corr(y, x));
    CHECK(wsnsense::order_m_corr(x, y, 2) == wsnsense::order_m_corr(y, x, 2));
  }

  SUBCASE("linear scale equivariance: corr(a*x+b, y) = sign(a)*corr(x, y)") {
    const double base = wsnsense::linear_corr(x, y);
    for (double a : {2.5, -0.75, 1e-3}) {
      for (double b : {0.0, 10.0, -3.25}) {
        std::vector<double> scaled(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) scaled[i] = a * xs[i] + b;
        const double got = wsnsense::linear_corr(Series::from(scaled), y);
        const double want = (a > 0 ? base : -base);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
      }
    }
  }

  SUBCASE("order-2 scale invariance: corr2(a*x, y) = corr2(x, y)") {
    const double base = wsnsense::order_m_corr(x, y, 2);
    for (double a : {3.0, -2.0, 0.125}) {
      std::vector<double> scaled(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) scaled[i] = a * xs[i];
      CHECK(wsnsense::order_m_corr(Series::from(scaled), y, 2) ==
            doctest::Approx(base).epsilon(1e-12));
    }
  }

  SUBCASE("results stay inside [-1, 1]") {
    wsnsense::Rng gen(17);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> a(10), b(10);
      for (auto& v : a) v = gen.uniform_real(-1.0, 1.0);
      for (auto& v : b) v = gen.uniform_real(-1.0, 1.0);
      const double r = wsnsense::linear_corr(Series::from(a), Series::from(b));
      CHECK(r >= -1.0);
      CHECK(r <= 1.0);
    }
  }
}

TEST_CASE("degenerate and invalid series are rejected") {
  CHECK_THROWS_AS(wsnsense::linear_corr(make({1, 1, 1}), make({1, 2, 3})),
                  wsnsense::DegenerateInputError);
  CHECK_THROWS_AS(wsnsense::linear_corr(make({1, 2, 3}), make({4, 4, 4})),
                  wsnsense::DegenerateInputError);
  CHECK_THROWS_AS(wsnsense::linear_corr(make({1, 2}), make({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(wsnsense::linear_corr(make({1, 2, 3}), make({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(wsnsense::order_m_corr(make({1, 2, 3}), make({1, 3, 2}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(wsnsense::corr_p_value(0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(wsnsense::corr_p_value(1.5, 10), std::invalid_argument);
}

TEST_CASE("p-value endpoints and reference value") {
  CHECK(wsnsense::corr_p_value(0.0, 10) == 1.0);
  CHECK(wsnsense::corr_p_value(0.0, 500) == 1.0);
  CHECK(wsnsense::corr_p_value(1.0, 10) == 0.0);
  CHECK(wsnsense::corr_p_value(-1.0, 10) == 0.0);

  // r = 0.5, M = 12 -> t = 1.8257, 10 dof, two-sided p ~ 0.0976
  const double p = wsnsense::corr_p_value(0.5, 12);
  CHECK(p == doctest::Approx(0.0976).epsilon(0.01));
  const double t = 0.5 * std::sqrt(10.0 / (1.0 - 0.25));
  CHECK(p == doctest::Approx(oracles::t_two_tail_quadrature(t, 10.0))
                 .epsilon(1e-8));
}

TEST_CASE("p-value agrees with quadrature across r and M") {
  for (std::size_t m : {5u, 12u, 50u, 200u}) {
    for (double r : {0.05, 0.2, 0.5, 0.8, 0.95}) {
      const double nu = static_cast<double>(m - 2);
      const double t = r * std::sqrt(nu / (1.0 - r * r));
      const double want = oracles::t_two_tail_quadrature(t, nu);
      CHECK(wsnsense::corr_p_value(r, m) ==
            doctest::Approx(want).epsilon(1e-7));
    }
  }
}

TEST_CASE("p-value is strictly decreasing in |r|") {
  for (std::size_t m : {4u, 12u, 100u}) {
    double prev = wsnsense::corr_p_value(0.0, m);
    for (int i = 1; i <= 100; ++i) {
      const double r = static_cast<double>(i) / 101.0;
      const double p = wsnsense::corr_p_value(r, m);
      CHECK(p < prev);
      CHECK(wsnsense::corr_p_value(-r, m) == p);
      prev = p;
    }
  }
}

TEST_CASE("regularized incomplete beta basics") {
  CHECK(wsnsense::regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(wsnsense::regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  // I_x(1,1) = x
  for (double x : {0.1, 0.25, 0.5, 0.9}) {
    CHECK(wsnsense::regularized_incomplete_beta(1.0, 1.0, x) ==
          doctest::Approx(x).epsilon(1e-14));
  }
  // I_x(a,b) + I_{1-x}(b,a) = 1
  for (double x : {0.05, 0.3, 0.7}) {
    const double lhs = wsnsense::regularized_incomplete_beta(2.5, 4.0, x) +
                       wsnsense::regularized_incomplete_beta(4.0, 2.5, 1.0 - x);
    CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
  }
}
