#include <doctest.h>

#include "polybern/euler.hpp"
#include "polybern/generalized.hpp"
#include "polybern/poly_bernoulli.hpp"

using namespace polybern;

namespace {
const MultiPoly X = MultiPoly::var(Var::X);
const MultiPoly La = MultiPoly::var(Var::La);
const MultiPoly Lb = MultiPoly::var(Var::Lb);
const MultiPoly Lc = MultiPoly::var(Var::Lc);
const std::vector<long> kKs{-3, -2, -1, 0, 1, 2, 3};

bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) {
      MESSAGE(format_report(r));
      return false;
    }
  }
  return !reports.empty();
}
}  // namespace

TEST_CASE("generalized numbers") {
  for (long k = -3; k <= 3; ++k) {
    CHECK(gen_pb_numbers(0, k) == MultiPoly(1));
    CHECK(gen_pb_numbers(1, k) == (La + Lb) * Rational(2).pow(-k) - Lb);
  }
  CHECK(gen_pb_numbers(1, 2) == (La + Lb) * Rational(1, 4) - Lb);
  // a = e, b = 1.
  const Bindings a_e_b_1{{Var::La, MultiPoly(1)}, {Var::Lb, MultiPoly(0)}};
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(gen_pb_numbers(n, 1).substitute(a_e_b_1) == MultiPoly(poly_bernoulli(n, 1)));
  }
}

TEST_CASE("both constructions of the numbers agree and are homogeneous") {
  const Bindings doubled{{Var::La, La * Rational(2)}, {Var::Lb, Lb * Rational(2)}};
  for (long k : kKs) {
    for (std::size_t n = 0; n <= 12; ++n) {
      const MultiPoly v = gen_pb_numbers(n, k);
      CHECK(v == gen_pb_numbers_sum(n, k));
      CHECK(v.is_homogeneous(static_cast<unsigned>(n)));
      CHECK_FALSE(v.mentions(Var::X));
      CHECK_FALSE(v.mentions(Var::Lc));
      CHECK(v.substitute(doubled) == v * Rational(2).pow(static_cast<long>(n)));
    }
  }
}

TEST_CASE("the sum starting at i = 1 misses the n = 0 term") {
  // sum_{i=1}^{n} ... B_n: at n = 0 it is the empty sum.
  auto from_one = [](std::size_t n, long k) {
    MultiPoly out;
    for (std::size_t i = 1; i <= n; ++i) {
      Rational c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * poly_bernoulli(n, k);
      if ((n - i) % 2 == 1) c = -c;
      out += (La + Lb).pow(static_cast<unsigned>(i)) * Lb.pow(static_cast<unsigned>(n - i)) * c;
    }
    return out;
  };
  CHECK(from_one(0, 1) != gen_pb_numbers(0, 1));
}

TEST_CASE("generating-function oracle at rational points") {
  const auto v = gen_pb_numbers_oracle(4, 1, Rational(1), Rational(0));
  CHECK(v == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 6), Rational(0), Rational(-1, 30)});

  CHECK(gen_pb_numbers_oracle(1, 2, Rational(1), Rational(1))[1] == Rational(-1, 2));

  const auto w = gen_pb_numbers_oracle(6, -1, Rational(1, 2), Rational(1, 3));
  const Point p{{Var::La, Rational(1, 2)}, {Var::Lb, Rational(1, 3)}};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(w[n] == gen_pb_numbers(n, -1).eval(p));

  CHECK_THROWS_WITH_AS(gen_pb_numbers_oracle(3, 1, Rational(1), Rational(-1)), "degenerate parameter point",
                       MathError);
}

TEST_CASE("seeded points are reproducible and non-degenerate") {
  const auto a = sample_points(42, 5);
  const auto b = sample_points(42, 5);
  CHECK(a == b);
  CHECK(a != sample_points(43, 5));
  for (const auto& p : a) {
    CHECK(p.size() == 4);
    CHECK_FALSE((p.at(Var::La) + p.at(Var::Lb)).is_zero());
  }
}

TEST_CASE("generalized polynomials") {
  for (long k = -2; k <= 3; ++k) {
    const Rational inv = Rational(2).pow(-k);
    CHECK(gen_pb_poly(1, k) == Lc * X + (La + Lb) * inv - Lb);
    CHECK(gen_pb_poly(0, k) == MultiPoly(1));
  }
  for (long k : kKs) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const MultiPoly p = gen_pb_poly(n, k);
      CHECK(p.substitute({{Var::X, MultiPoly(0)}}) == gen_pb_numbers(n, k));
      CHECK(p.degree(Var::X) <= n);
      for (unsigned j = 0; j <= p.degree(Var::X); ++j) {
        // The coefficient of X^j carries Lc^j.
        MultiPoly rest = p.coefficient_of(Var::X, j);
        for (unsigned i = 0; i < j; ++i) {
          auto q = rest.divide_by_var(Var::Lc);
          REQUIRE(q.has_value());
          rest = *q;
        }
      }
      // a = e, b = 1, c = e gives the classical polynomial.
      const Bindings classical{{Var::La, MultiPoly(1)}, {Var::Lb, MultiPoly(0)}, {Var::Lc, MultiPoly(1)}};
      CHECK(p.substitute(classical) == poly_bernoulli_poly(n, k));
      // ln a -> 1 + X, ln b -> -X on the numbers gives B_n(X).
      CHECK(gen_pb_numbers(n, k).substitute({{Var::La, MultiPoly(1) + X}, {Var::Lb, -X}}) ==
            poly_bernoulli_poly(n, k));
    }
  }
}

TEST_CASE("four constructions of the generalized polynomial agree") {
  for (long k : kKs) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const MultiPoly p = gen_pb_poly(n, k);
      CHECK(gen_pb_poly_homogeneous(n, k) == p);
      CHECK(gen_pb_poly_via_polynomials(n, k) == p);
      CHECK(gen_pb_poly_double_sum(n, k) == p);
    }
  }
}

TEST_CASE("trailing power x^(n-k) in the double sum does not give the polynomial") {
  auto wrong_power = [](std::size_t n, long k) {
    MultiPoly out;
    for (std::size_t l = 0; l <= n; ++l) {
      for (std::size_t j = 0; j <= l; ++j) {
        Rational c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) *
                     binomial(static_cast<unsigned>(l), static_cast<unsigned>(j)) * poly_bernoulli(j, k);
        if ((l - j) % 2 == 1) c = -c;
        out += Lc.pow(static_cast<unsigned>(n - l)) * Lb.pow(static_cast<unsigned>(l - j)) *
               (La + Lb).pow(static_cast<unsigned>(j)) * X.pow(static_cast<unsigned>(n - static_cast<std::size_t>(k))) * c;
      }
    }
    return out;
  };
  CHECK(wrong_power(3, 1) != gen_pb_poly(3, 1));
}

TEST_CASE("derivatives") {
  for (long k : {-1L, 2L}) {
    CHECK(pb_derivative(4, k, 0) == gen_pb_poly(4, k));
    CHECK(pb_derivative(1, k, 1) == Lc);
    CHECK(pb_derivative(3, k, 4).is_zero());
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(pb_derivative(n, k, 1) == gen_pb_poly(n - 1, k) * Lc * Rational(static_cast<long>(n)));
      for (std::size_t l = 0; l <= n + 1; ++l) CHECK(pb_derivative(n, k, l) == pb_derivative_closed(n, k, l));
    }
  }
}

TEST_CASE("definite integrals") {
  CHECK(pb_definite_integral(3, 2, Rational(1, 3), Rational(1, 3)).is_zero());
  CHECK(pb_definite_integral(0, 2, Rational(0), Rational(1)) == MultiPoly(1));
  CHECK(pb_integral_closed(0, 2, Rational(0), Rational(1)) == MultiPoly(1));
  const MultiPoly expected = Lc * Rational(1, 2) + (La + Lb) * Rational(1, 4) - Lb;
  CHECK(pb_definite_integral(1, 2, Rational(0), Rational(1)) == expected);
  CHECK(pb_integral_closed(1, 2, Rational(0), Rational(1)) == expected);
}

TEST_CASE("theorem suites pass") {
  CHECK(all_pass(verify_theorem1(6, kKs)));
  CHECK(all_pass(verify_theorem2(6, kKs)));
  CHECK(all_pass(verify_theorem3(6, kKs)));
  CHECK(all_pass(verify_theorem4(6, kKs)));
  CHECK(all_pass(verify_theorem5(6, {1, 2})));
  CHECK(all_pass(verify_corollary1(10)));
}

TEST_CASE("addition formula at n = 1, y = 2/3") {
  const Rational y(2, 3);
  for (long k : {1L, 2L}) {
    const MultiPoly p = gen_pb_poly(1, k);
    CHECK(p.substitute({{Var::X, X + MultiPoly(y)}}) == Lc * y + p);
  }
}

TEST_CASE("b = c family at n = 1, k1 = 1") {
  const MultiPoly b1 = gen_pb_poly(1, 1).substitute(euler_a1_c_eq_b());
  CHECK(b1 == Lb * X - Lb * Rational(1, 2));
  const MultiPoly e1 = gen_euler_poly(1).substitute(euler_a1_c_eq_b());
  const MultiPoly rhs = (MultiPoly(1) + MultiPoly(1)) * e1 * Rational(1, 2) +
                        (b1.substitute({{Var::X, MultiPoly(0)}}) + b1.substitute({{Var::X, MultiPoly(1)}})) *
                            Rational(1, 2);
  CHECK(b1 == rhs);
}

TEST_CASE("summand B_n in place of B_k breaks the b = c expansion") {
  const Bindings a1_bc = euler_a1_c_eq_b();
  const std::size_t n = 2;
  const MultiPoly bn = gen_pb_poly(n, 1).substitute(a1_bc);
  const auto euler = gen_euler_polys(n);
  MultiPoly rhs;
  const MultiPoly bracket = bn.substitute({{Var::X, MultiPoly(0)}}) + bn.substitute({{Var::X, MultiPoly(1)}});
  for (std::size_t k = 0; k <= n; ++k) {
    rhs += bracket * euler[n - k].substitute(a1_bc) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  }
  CHECK(bn != rhs * Rational(1, 2));
}

TEST_CASE("corollary at n = 2 by hand") {
  const MultiPoly lhs = classical_bernoulli_poly(2);
  CHECK(lhs == X * X - X + MultiPoly(Rational(1, 6)));
  CHECK(lhs == euler_poly(2) + MultiPoly(Rational(1, 6)));
}
