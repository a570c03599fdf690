#include <doctest.h>

#include <thread>
#include <vector>

#include "combinatorics_oracles.hpp"
#include "polybern/poly_bernoulli.hpp"
#include "polybern/series_gf.hpp"

using namespace polybern;

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == Rational(1));
  CHECK(stirling2(3, 2) == Rational(static_cast<long>(testing::count_set_partitions(3, 2))));
  CHECK(stirling2(3, 2) == Rational(3));
  CHECK(stirling2(2, 5) == Rational(0));
  CHECK(stirling2(5, 0) == Rational(0));

  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      CHECK(stirling2(n, m) == Rational(static_cast<long>(testing::count_set_partitions(n, m))));
    }
  }
  for (std::size_t n = 0; n <= 25; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(stirling2(n, m) == testing::stirling2_alternating_sum(n, m));
    }
  }
}

TEST_CASE("Stirling cap") {
  PolyBernoulliCache small(5);
  CHECK(small.stirling2(5, 2) == Rational(15));
  CHECK_THROWS_AS(small.stirling2(6, 2), std::out_of_range);
  PolyBernoulliCache big(100);
  CHECK(big.stirling2(100, 100) == Rational(1));
}

TEST_CASE("poly-Bernoulli numbers") {
  for (long k = -7; k <= 7; ++k) CHECK(poly_bernoulli(0, k) == Rational(1));
  // -1/2^2 + 2/3^2.
  CHECK(poly_bernoulli(2, 2) == Rational(-1, 4) + Rational(2, 9));
  CHECK(poly_bernoulli(2, 2) == Rational(-1, 36));
  CHECK(poly_bernoulli(0, 1) == Rational(1));
  CHECK(poly_bernoulli(1, 1) == Rational(1, 2));
  CHECK(poly_bernoulli(2, 1) == Rational(1, 6));
  for (long k = 0; k <= 6; ++k) CHECK(poly_bernoulli(1, k) == Rational(1, 1L << k));
}

TEST_CASE("negative index") {
  CHECK(poly_bernoulli_negative(1, 1) == Rational(2));
  CHECK(poly_bernoulli_negative(2, 2) == Rational(14));
  for (std::size_t n = 0; n <= 10; ++n) CHECK(poly_bernoulli_negative(n, 0) == Rational(1));
}

TEST_CASE("negative index counts lonesum matrices") {
  CHECK(testing::count_lonesum_matrices(2, 2) == 14);
  CHECK(testing::count_lonesum_matrices(1, 1) == 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; n * k <= 16; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(poly_bernoulli_negative(n, k) == Rational(static_cast<long>(testing::count_lonesum_matrices(n, k))));
    }
  }
}

TEST_CASE("closed form matches the series for -5 <= k <= 5") {
  for (long k = -5; k <= 5; ++k) {
    const auto gf = gf_poly_bernoulli(k, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(poly_bernoulli(n, k) == egf_coefficient(gf, n));
    }
  }
}

TEST_CASE("both negative-index formulas agree, with duality") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= 12; ++k) {
      const Rational v = poly_bernoulli_negative(n, k);
      CHECK(v == poly_bernoulli(n, -static_cast<long>(k)));
      CHECK(v == poly_bernoulli_negative(k, n));
      CHECK(v.is_integer());
      CHECK(v.sign() > 0);
    }
  }
}

TEST_CASE("poly-Bernoulli polynomials") {
  CHECK(poly_bernoulli_poly(0, 4) == MultiPoly(1));
  CHECK(poly_bernoulli_poly(1, 2) == MultiPoly::var(Var::X) + MultiPoly(Rational(1, 4)));
  for (long k = -3; k <= 3; ++k) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const MultiPoly p = poly_bernoulli_poly(n, k);
      CHECK(p.substitute({{Var::X, MultiPoly(0)}}) == MultiPoly(poly_bernoulli(n, k)));
      CHECK(p.degree(Var::X) == n);
    }
  }
}

TEST_CASE("classical Bernoulli numbers and the sign convention") {
  CHECK(classical_bernoulli(0) == Rational(1));
  CHECK(classical_bernoulli(1) == Rational(-1, 2));
  CHECK(classical_bernoulli(3) == Rational(0));
  for (std::size_t n = 0; n <= 16; ++n) {
    const Rational expected = n == 1 ? -poly_bernoulli(1, 1) : poly_bernoulli(n, 1);
    CHECK(classical_bernoulli(n) == expected);
  }
  const MultiPoly x = MultiPoly::var(Var::X);
  CHECK(classical_bernoulli_poly(2) == x * x - x + MultiPoly(Rational(1, 6)));
}

TEST_CASE("concurrent cache access") {
  PolyBernoulliCache cache;
  std::vector<std::thread> workers;
  std::vector<Rational> results(8);
  for (std::size_t i = 0; i < results.size(); ++i) {
    workers.emplace_back([&cache, &results, i] {
      Rational acc;
      for (std::size_t n = 0; n <= 15; ++n) {
        for (long k = -4; k <= 4; ++k) acc += cache.poly_bernoulli(n, k);
      }
      results[i] = acc;
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == results.front());
}
