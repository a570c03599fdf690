#include <doctest.h>

#include "polybern/rational.hpp"
#include "test_support.hpp"

using polybern::ArithOp;
using polybern::Rational;
using polybern::rat_arith;

TEST_CASE("rational arithmetic examples") {
  CHECK(rat_arith(ArithOp::add, Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
  CHECK(rat_arith(ArithOp::mul, Rational(0), Rational(7, 3)).str() == "0");
  // (-1/2) / (2/3) by cross multiplication: (-1*3) / (2*2).
  CHECK(rat_arith(ArithOp::div, Rational(-1, 2), Rational(2, 3)) == Rational(-1 * 3, 2 * 2));
  CHECK(rat_arith(ArithOp::div, Rational(-1, 2), Rational(2, 3)).str() == "-3/4");
  CHECK(rat_arith(ArithOp::sub, Rational(1, 2), Rational(1, 2)).str() == "0");
}

TEST_CASE("canonical form") {
  const Rational r(6, -8);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "4");
  CHECK(Rational(0, -5).str() == "0");
  CHECK(Rational(0, -5).denominator() == "1");
  CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("division by zero is an error, not a crash") {
  CHECK_THROWS_AS(rat_arith(ArithOp::div, Rational(1), Rational(0)), polybern::DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), polybern::DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), polybern::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("3/0"), polybern::DivisionByZero);
  Rational a(2, 3);
  CHECK_THROWS(a /= Rational(0));
  CHECK(a == Rational(2, 3));
}

TEST_CASE("parse") {
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse(""), polybern::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), polybern::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), polybern::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), polybern::ParseError);
}

TEST_CASE("powers, factorials, binomials") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(polybern::factorial(0) == Rational(1));
  CHECK(polybern::factorial(10) == Rational(3628800));
  CHECK(polybern::binomial(10, 3) == Rational(120));
  CHECK(polybern::binomial(3, 5) == Rational(0));
  // 25! exceeds 64 bits.
  CHECK(polybern::factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("field axioms on random rationals") {
  polybern::testing::Gen gen(7);
  for (int i = 0; i < 300; ++i) {
    const Rational p = gen.rational(50);
    const Rational q = gen.rational(50);
    const Rational r = gen.rational(50);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    if (!q.is_zero()) CHECK((p / q) * q == p);
  }
}

TEST_CASE("text round trip") {
  polybern::testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational p = gen.rational(1000) * gen.rational(1000);
    CHECK(Rational::parse(p.str()) == p);
  }
}

TEST_CASE("ordering") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
}
