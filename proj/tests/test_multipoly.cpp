#include <doctest.h>

#include "polybern/multipoly.hpp"
#include "test_support.hpp"

using namespace polybern;

namespace {
const MultiPoly X = MultiPoly::var(Var::X);
const MultiPoly La = MultiPoly::var(Var::La);
const MultiPoly Lb = MultiPoly::var(Var::Lb);
const MultiPoly Lc = MultiPoly::var(Var::Lc);
}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  CHECK(poly_arith(PolyOp::add, La, Lb).str() == "La + Lb");
  CHECK(poly_arith(PolyOp::mul, La + Lb, La - Lb) == La * La - Lb * Lb);
  CHECK(poly_arith(PolyOp::mul, La + Lb, La - Lb).str() == "La^2 - Lb^2");
  CHECK(poly_arith(PolyOp::mul, X, MultiPoly(0)).is_zero());
  CHECK(poly_arith(PolyOp::sub, X, X).str() == "0");
}

TEST_CASE("no zero coefficients are stored") {
  const MultiPoly p = (X + La) - La;
  CHECK(p.size() == 1);
  CHECK(p == X);
  CHECK((X * Rational(0)).size() == 0);
}

TEST_CASE("substitution examples") {
  const MultiPoly one = (La + Lb).substitute({{Var::La, MultiPoly(1)}, {Var::Lb, MultiPoly(0)}});
  CHECK(one == MultiPoly(1));
  CHECK(((La + Lb) * X).substitute({{Var::X, -Lb}}) == -(La + Lb) * Lb);
  CHECK(La.substitute({{Var::La, La + Lc}}).str() == "La + Lc");
  // Simultaneous, not sequential.
  CHECK((La - Lb).substitute({{Var::La, Lb}, {Var::Lb, La}}) == Lb - La);
}

TEST_CASE("evaluation") {
  const Point p{{Var::La, Rational(2)}, {Var::Lb, Rational(3)}, {Var::X, Rational(0)}, {Var::Lc, Rational(0)}};
  CHECK((La * La + Lb).eval(p) == Rational(7));
  CHECK(MultiPoly(0).eval({}) == Rational(0));
  // B_1^{(4)}(a,b) = (La+Lb)/2^4 - Lb at La = Lb = 1.
  const MultiPoly b14 = (La + Lb) * Rational(1, 16) - Lb;
  CHECK(b14.eval({{Var::La, Rational(1)}, {Var::Lb, Rational(1)}}) == Rational(-7, 8));

  try {
    (X + Lc).eval({{Var::X, Rational(1)}});
    FAIL("expected UnboundIndeterminate");
  } catch (const UnboundIndeterminate& e) {
    CHECK(e.symbol() == "ln(c)");
  }
}

TEST_CASE("canonical rendering") {
  const MultiPoly p = Lc * X + La * Rational(1, 4) - Lb * Rational(3, 4);
  CHECK(p.str() == "X*Lc + 1/4*La - 3/4*Lb");
  CHECK(p.str(RenderStyle::display) == "ln(c)*x + 1/4*ln(a) - 3/4*ln(b)");
  CHECK((X + MultiPoly(Rational(1, 4))).str(RenderStyle::display) == "x + 1/4");
  CHECK((-X * X + MultiPoly(-1)).str() == "-X^2 - 1");
  CHECK(MultiPoly(0).str() == "0");
}

TEST_CASE("parse accepts both renderings") {
  const MultiPoly p = Lc * X + La * Rational(1, 4) - Lb * Rational(3, 4);
  CHECK(MultiPoly::parse("X*Lc + 1/4*La - 3/4*Lb") == p);
  CHECK(MultiPoly::parse("ln(c)*x + 1/4*ln(a) - 3/4*ln(b)") == p);
  CHECK(MultiPoly::parse("-X^2 - 1") == -X * X - MultiPoly(1));
  CHECK(MultiPoly::parse("0").is_zero());
  CHECK_THROWS_AS(MultiPoly::parse("X +"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("Z"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("Lab"), ParseError);
}

TEST_CASE("calculus and divisibility") {
  const MultiPoly p = X * X * Lc + X * Rational(3) + La;
  CHECK(p.derivative(Var::X) == X * Lc * Rational(2) + MultiPoly(3));
  CHECK(p.antiderivative(Var::X).derivative(Var::X) == p);
  CHECK((Lc * X + Lc * La).divide_by_var(Var::Lc) == X + La);
  CHECK_FALSE((Lc * X + La).divide_by_var(Var::Lc).has_value());
  CHECK(MultiPoly(0).divide_by_var(Var::Lc) == MultiPoly(0));
  CHECK(p.degree(Var::X) == 2);
  CHECK(p.total_degree() == 3);
  CHECK(p.coefficient_of(Var::X, 2) == Lc);
}

TEST_CASE("properties on random polynomials") {
  testing::Gen gen(2024);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = gen.poly();
    const MultiPoly q = gen.poly();
    const MultiPoly r = gen.poly();
    const Point v = gen.point();

    // Evaluation is a ring homomorphism.
    CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
    CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));

    // Identity bindings change nothing.
    Bindings identity;
    for (Var var : kAllVars) identity[var] = MultiPoly::var(var);
    CHECK(p.substitute(identity) == p);

    // Substituting constants then evaluating equals evaluating.
    Bindings constants;
    for (const auto& [var, value] : v) constants[var] = MultiPoly(value);
    CHECK(p.substitute(constants) == MultiPoly(p.eval(v)));

    // Text round trip.
    CHECK(MultiPoly::parse(p.str()) == p);
    CHECK(MultiPoly::parse(p.str(RenderStyle::display)) == p);
  }
}
