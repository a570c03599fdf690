#include <doctest.h>

#include "polybern/series_gf.hpp"

using namespace polybern;

TEST_CASE("polylogarithm coefficients") {
  const auto li1 = polylog_series(1, 3);
  CHECK(li1[0] == Rational(0));
  CHECK(li1[1] == Rational(1));
  CHECK(li1[2] == Rational(1, 2));
  CHECK(li1[3] == Rational(1, 3));
  // z/(1-z) and z/(1-z)^2.
  CHECK(polylog_series(0, 3).coefficients() == std::vector<Rational>{0, 1, 1, 1});
  CHECK(polylog_series(-1, 3).coefficients() == std::vector<Rational>{0, 1, 2, 3});
  CHECK(polylog_series(-2, 3)[3] == Rational(9));
}

TEST_CASE("Li_0 and Li_-1 match their rational-function forms") {
  const std::size_t order = 10;
  const auto z = RationalSeries::monomial(Rational(1), 1, order);
  const auto one_minus_z = RationalSeries::constant(Rational(1), order) - z;
  CHECK(ps_div(z, one_minus_z) == polylog_series(0, order));
  CHECK(ps_div(z, one_minus_z * one_minus_z) == polylog_series(-1, order));
}

TEST_CASE("poly-Bernoulli generating function values") {
  const auto k1 = gf_poly_bernoulli(1, 2);
  CHECK(k1.order() == 2);
  CHECK(k1[0] == Rational(1));
  CHECK(k1[1] == Rational(1, 2));
  CHECK(k1[2] == Rational(1, 12));
  CHECK(egf_coefficient(k1, 2) == Rational(1, 6));

  CHECK(egf_coefficient(gf_poly_bernoulli(2, 4), 1) == Rational(1, 4));
  CHECK(egf_coefficient(gf_poly_bernoulli(-2, 4), 2) == Rational(14));
  // Li_0 gives e^t, so every B_n^{(0)} is 1.
  const auto k0 = gf_poly_bernoulli(0, 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(egf_coefficient(k0, n) == Rational(1));
}

TEST_CASE("iterated integrals reproduce the generating function") {
  CHECK(gf_iterated_integral(1, 2) == gf_poly_bernoulli(1, 2));
  for (long k = 1; k <= 5; ++k) {
    for (std::size_t order = 0; order <= 12; ++order) {
      CAPTURE(k);
      CAPTURE(order);
      CHECK(gf_iterated_integral(k, order) == gf_poly_bernoulli(k, order));
    }
  }
  CHECK_THROWS_AS(gf_iterated_integral(0, 4), SeriesError);
}

TEST_CASE("classical Bernoulli generating function") {
  const auto b = gf_bernoulli(6);
  CHECK(egf_coefficient(b, 0) == Rational(1));
  CHECK(egf_coefficient(b, 1) == Rational(-1, 2));
  CHECK(egf_coefficient(b, 2) == Rational(1, 6));
  CHECK(egf_coefficient(b, 3) == Rational(0));
  CHECK(egf_coefficient(b, 4) == Rational(-1, 30));
  CHECK(egf_coefficient(b, 6) == Rational(1, 42));
}
