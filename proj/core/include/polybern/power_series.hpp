#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polybern/multipoly.hpp"
#include "polybern/rational.hpp"

namespace polybern {

// Coefficient-ring hooks. A ring C needs +, -, *, construction from
// Rational, and the three functions below.
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const MultiPoly& c) { return c.is_zero(); }

/// The coefficient as an invertible Rational, if it is one.
inline std::optional<Rational> coeff_as_unit(const Rational& c) {
  if (c.is_zero()) return std::nullopt;
  return c;
}
inline std::optional<Rational> coeff_as_unit(const MultiPoly& c) {
  auto k = c.as_constant();
  if (!k || k->is_zero()) return std::nullopt;
  return k;
}

inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const MultiPoly& c) { return c.str(); }

template <typename C>
concept SeriesCoefficient = requires(const C& a, const C& b, const Rational& r) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a * r } -> std::convertible_to<C>;
  { C(r) };
  { coeff_is_zero(a) } -> std::same_as<bool>;
  { coeff_as_unit(a) } -> std::same_as<std::optional<Rational>>;
};

/// Truncated power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
/// Binary operations on series of different orders truncate to the smaller
/// order; nothing ever extends the order silently.
template <SeriesCoefficient C>
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, C(Rational(0))) {}

  /// Coefficients beyond `order` are dropped, missing ones are zero.
  PowerSeries(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, C(Rational(0)));
  }

  static PowerSeries constant(const C& c, std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * t^power, truncated.
  static PowerSeries monomial(const C& c, std::size_t power, std::size_t order) {
    PowerSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const C& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<C>& coefficients() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, order()+1 for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeff_is_zero(coeffs_[i])) return i;
    }
    return coeffs_.size();
  }

  PowerSeries truncated(std::size_t order) const {
    return PowerSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1),
                       std::min(order, this->order()));
  }

  /// Drops the first k coefficients (division by t^k); order shrinks by k.
  PowerSeries shifted_down(std::size_t k) const {
    if (k > order()) throw SeriesError("shift exceeds truncation order");
    return PowerSeries(std::vector<C>(coeffs_.begin() + k, coeffs_.end()), order() - k);
  }

  template <typename F>
  PowerSeries<std::invoke_result_t<F, const C&>> map(F&& f) const {
    using D = std::invoke_result_t<F, const C&>;
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return PowerSeries<D>(std::move(out), order());
  }

  PowerSeries operator-() const {
    return map([](const C& c) { return C(Rational(0)) - c; });
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }

  /// Cauchy product up to the smaller order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (coeff_is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& a, const Rational& r) {
    return a.map([&](const C& c) { return C(c * r); });
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// "c0 + c1*t + c2*t^2 + O(t^3)"; zero coefficients are omitted.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const C& c = coeffs_[i];
      if (coeff_is_zero(c)) continue;
      std::string body = coeff_str(c);
      const bool negative_atom = body.front() == '-' && body.find_first_of("+-", 1) == std::string::npos;
      const bool compound = !negative_atom && body.find_first_of("+-", 1) != std::string::npos;
      std::string sign = " + ";
      if (negative_atom) {
        sign = " - ";
        body.erase(0, 1);
      }
      if (compound && i > 0) body = "(" + body + ")";
      std::string power = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      std::string term;
      if (i == 0) {
        term = body;
      } else if (body == "1") {
        term = power;
      } else {
        term = body + "*" + power;
      }
      if (out.empty()) {
        out = (sign == " - " ? "-" : "") + term;
      } else {
        out += sign + term;
      }
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(order() + 1) + ")";
  }

 private:
  std::vector<C> coeffs_;
};

using RationalSeries = PowerSeries<Rational>;
using PolySeries = PowerSeries<MultiPoly>;

inline PolySeries lift(const RationalSeries& s) {
  return s.map([](const Rational& c) { return MultiPoly(c); });
}

/// Quotient num/den with both series first shifted down by valuation(den).
/// Throws SeriesError("non-series quotient") when valuation(num) <
/// valuation(den) and SeriesError("leading coefficient not a unit") when
/// the shifted leading coefficient of den is not a nonzero Rational.
template <SeriesCoefficient C>
PowerSeries<C> ps_div(const PowerSeries<C>& num, const PowerSeries<C>& den) {
  const std::size_t n = std::min(num.order(), den.order());
  const auto a = num.truncated(n);
  const auto b = den.truncated(n);
  const std::size_t v = b.valuation();
  if (v > n) throw SeriesError("division by the zero series");
  if (a.valuation() < v) throw SeriesError("non-series quotient");
  const auto shifted_num = a.shifted_down(v);
  const auto shifted_den = b.shifted_down(v);
  const auto lead = coeff_as_unit(shifted_den[0]);
  if (!lead) throw SeriesError("leading coefficient not a unit");
  const Rational inv = lead->inverse();

  const std::size_t m = shifted_num.order();
  std::vector<C> q;
  q.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    C acc = shifted_num[i];
    for (std::size_t j = 1; j <= i; ++j) {
      if (coeff_is_zero(shifted_den[j]) || coeff_is_zero(q[i - j])) continue;
      acc = acc - shifted_den[j] * q[i - j];
    }
    q.push_back(acc * inv);
  }
  return PowerSeries<C>(std::move(q), m);
}

/// outer(inner(t)) by Horner's rule over truncated series. The inner
/// series must have a zero constant term.
template <SeriesCoefficient C>
PowerSeries<C> ps_compose(const PowerSeries<C>& outer, const PowerSeries<C>& inner) {
  if (!coeff_is_zero(inner[0])) throw SeriesError("composition with nonzero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  const auto in = inner.truncated(n);
  auto acc = PowerSeries<C>::constant(outer[outer.order()], n);
  for (std::size_t i = outer.order(); i-- > 0;) {
    acc = acc * in + PowerSeries<C>::constant(outer[i], n);
  }
  return acc;
}

/// e^{ct} = sum c^n t^n / n!.
template <SeriesCoefficient C>
PowerSeries<C> ps_exp_linear(const C& c, std::size_t order) {
  std::vector<C> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(C(Rational(1)));
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs.push_back(C(coeffs.back() * c * Rational(1, static_cast<long>(n))));
  }
  return PowerSeries<C>(std::move(coeffs), order);
}

/// Termwise d/dt; the order drops by one (a series of order 0 becomes 0 + O(t)).
template <SeriesCoefficient C>
PowerSeries<C> ps_diff(const PowerSeries<C>& s) {
  if (s.order() == 0) return PowerSeries<C>(0);
  std::vector<C> out;
  out.reserve(s.order());
  for (std::size_t i = 1; i <= s.order(); ++i) out.push_back(C(s[i] * Rational(static_cast<long>(i))));
  return PowerSeries<C>(std::move(out), s.order() - 1);
}

/// Termwise integral from 0 to t; the order grows by one.
template <SeriesCoefficient C>
PowerSeries<C> ps_integrate(const PowerSeries<C>& s) {
  std::vector<C> out;
  out.reserve(s.order() + 2);
  out.push_back(C(Rational(0)));
  for (std::size_t i = 0; i <= s.order(); ++i) {
    out.push_back(C(s[i] * Rational(1, static_cast<long>(i + 1))));
  }
  return PowerSeries<C>(std::move(out), s.order() + 1);
}

enum class SeriesOp { add, sub, mul };

template <SeriesCoefficient C>
PowerSeries<C> ps_arith(SeriesOp op, const PowerSeries<C>& a, const PowerSeries<C>& b) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  throw MathError("unknown series operation");
}

enum class CalculusOp { diff, integrate };

template <SeriesCoefficient C>
PowerSeries<C> ps_calculus(CalculusOp op, const PowerSeries<C>& s) {
  return op == CalculusOp::diff ? ps_diff(s) : ps_integrate(s);
}

/// n! times the coefficient of t^n: the exponential-generating-function value.
template <SeriesCoefficient C>
C egf_coefficient(const PowerSeries<C>& s, std::size_t n) {
  return C(s[n] * factorial(static_cast<unsigned>(n)));
}

}  // namespace polybern
