#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "polybern/rational.hpp"

namespace polybern {

/// Indeterminates of the coefficient ring. La, Lb, Lc stand for ln a, ln b,
/// ln c. Y is an auxiliary slot used only while checking addition theorems
/// that need a second free argument.
enum class Var : std::uint8_t { X = 0, La = 1, Lb = 2, Lc = 3, Y = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::X, Var::La, Var::Lb, Var::Lc, Var::Y};

/// Internal symbol name: "X", "La", "Lb", "Lc", "Y".
std::string_view var_name(Var v);
/// Human-facing name: "x", "ln(a)", "ln(b)", "ln(c)", "y".
std::string_view var_display_name(Var v);

/// Exponent vector indexed by Var.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);

  unsigned operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  unsigned total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  Monomial with(Var v, unsigned exponent) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kNumVars> exps_{};
};

/// Graded lexicographic order, X > La > Lb > Lc > Y, largest first.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Simultaneous substitution table; unbound slots pass through unchanged.
class MultiPoly;
using Bindings = std::map<Var, MultiPoly>;
/// Total assignment of Rationals used by evaluation.
using Point = std::map<Var, Rational>;

enum class RenderStyle {
  /// Round-trippable: "X*Lc + 1/4*La - 3/4*Lb".
  internal,
  /// CLI output: "ln(c)*x + 1/4*ln(a) - 3/4*ln(b)".
  display,
};

/// Sparse multivariate polynomial over Rational in canonical form: no zero
/// coefficients are stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v);
  static MultiPoly term(const Rational& c, const Monomial& m);
  /// Parses the internal rendering. Throws ParseError.
  static MultiPoly parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// The constant value if the polynomial has no indeterminates.
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool mentions(Var v) const { return degree(v) > 0; }
  /// True when every term has total degree d (the zero polynomial qualifies).
  bool is_homogeneous(unsigned d) const;
  /// Coefficient of v^j viewed as a polynomial in the remaining symbols.
  MultiPoly coefficient_of(Var v, unsigned j) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned e) const;

  MultiPoly substitute(const Bindings& bindings) const;
  /// Throws UnboundIndeterminate naming the first symbol missing from point.
  Rational eval(const Point& point) const;

  MultiPoly derivative(Var v) const;
  /// Termwise antiderivative with zero constant of integration.
  MultiPoly antiderivative(Var v) const;
  /// p / v when v divides every term, nullopt otherwise.
  std::optional<MultiPoly> divide_by_var(Var v) const;

  std::string str(RenderStyle style = RenderStyle::internal) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(PolyOp op, const MultiPoly& p, const MultiPoly& q);

}  // namespace polybern
