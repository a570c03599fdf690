#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polybern/identity_report.hpp"
#include "polybern/multipoly.hpp"
#include "polybern/power_series.hpp"

namespace polybern {

/// Extra series coefficients computed beyond n_max by the oracles.
inline constexpr std::size_t kDefaultOrderMargin = 2;

// ---------------------------------------------------------------------------
// Closed forms. The parameters a, b, c enter only through La = ln a,
// Lb = ln b, Lc = ln c, so every value is a polynomial over Rational.
// ---------------------------------------------------------------------------

/// Homogeneous substitution X -> num/den in a polynomial p of X-degree <= n:
/// each c X^e becomes c num^e den^(n-e). No fraction is ever formed.
MultiPoly homogeneous_substitute(const MultiPoly& p, const MultiPoly& num, const MultiPoly& den, std::size_t n);

/// B_n^{(k)}(a,b) as B_n^{(k)}(-Lb/(La+Lb)) (La+Lb)^n, through
/// homogeneous_substitute on poly_bernoulli_poly(n, k).
MultiPoly gen_pb_numbers(std::size_t n, long k);

/// The same numbers from the explicit sum
/// sum_{i=0}^{n} (-1)^{n-i} (La+Lb)^i Lb^{n-i} C(n,i) B_i^{(k)}.
MultiPoly gen_pb_numbers_sum(std::size_t n, long k);

/// B_n^{(k)}(x;a,b,c) = sum_l C(n,l) Lc^{n-l} B_l^{(k)}(a,b) X^{n-l}.
MultiPoly gen_pb_poly(std::size_t n, long k);

/// (La+Lb)^n B_n^{(k)}((-Lb + X Lc)/(La+Lb)), homogeneously.
MultiPoly gen_pb_poly_homogeneous(std::size_t n, long k);

/// sum_l C(n,l) Lc^{n-l} [B_l^{(k)}(-Lb/(La+Lb)) (La+Lb)^l] X^{n-l}.
MultiPoly gen_pb_poly_via_polynomials(std::size_t n, long k);

/// Fully expanded double sum over the numbers B_j^{(k)}:
/// sum_l sum_j (-1)^{l-j} C(n,l) C(l,j) Lc^{n-l} Lb^{l-j} (La+Lb)^j B_j^{(k)} X^{n-l}.
MultiPoly gen_pb_poly_double_sum(std::size_t n, long k);

// ---------------------------------------------------------------------------
// Generating-function oracles at Rational points.
// ---------------------------------------------------------------------------

/// Li_k(1 - (ab)^{-t}) / (b^t - a^{-t}) at the given (La, Lb), expanded to
/// `order`. Throws MathError("degenerate parameter point") when La+Lb = 0.
RationalSeries gen_pb_numbers_series(long k, const Rational& la, const Rational& lb, std::size_t order);

/// n! [t^n] of the series above for n <= n_max.
std::vector<Rational> gen_pb_numbers_oracle(std::size_t n_max, long k, const Rational& la, const Rational& lb,
                                            std::size_t order_margin = kDefaultOrderMargin);

/// The same quotient times c^{xt} at a full point (X, La, Lb, Lc).
RationalSeries gen_pb_poly_series(long k, const Point& point, std::size_t order);
std::vector<Rational> gen_pb_poly_oracle(std::size_t n_max, long k, const Point& point,
                                         std::size_t order_margin = kDefaultOrderMargin);

/// Deterministic pseudo-random Rational points binding X, La, Lb, Lc with
/// La + Lb != 0. Identical seeds give identical points on every platform.
std::vector<Point> sample_points(std::uint64_t seed, std::size_t count);

// ---------------------------------------------------------------------------
// Calculus in x.
// ---------------------------------------------------------------------------

/// l-th X-derivative of gen_pb_poly(n, k); zero for l > n.
MultiPoly pb_derivative(std::size_t n, long k, std::size_t l);
/// n!/(n-l)! Lc^l B_{n-l}^{(k)}(x,a,b,c); zero for l > n.
MultiPoly pb_derivative_closed(std::size_t n, long k, std::size_t l);

/// Integral of gen_pb_poly(n, k) in X from alpha to beta by termwise
/// antidifferentiation; a polynomial in La, Lb, Lc.
MultiPoly pb_definite_integral(std::size_t n, long k, const Rational& alpha, const Rational& beta);
/// [B_{n+1}(beta) - B_{n+1}(alpha)] / ((n+1) Lc). The Lc division is exact
/// polynomial division; nullopt when Lc does not divide the bracket.
std::optional<MultiPoly> pb_integral_closed(std::size_t n, long k, const Rational& alpha, const Rational& beta);

// ---------------------------------------------------------------------------
// Identity verification. Failures are reported, never thrown.
// ---------------------------------------------------------------------------

struct Theorem1Options {
  std::uint64_t seed = 42;
  std::size_t points = 3;
  std::size_t order_margin = kDefaultOrderMargin;
};

/// T1.11 .. T1.16.
std::vector<IdentityReport> verify_theorem1(std::size_t n_max, const std::vector<long>& ks,
                                            const Theorem1Options& options = {});

/// Addition formula in x at each y in ys, plus one symbolic pass with the
/// auxiliary indeterminate Y.
std::vector<IdentityReport> verify_theorem2(std::size_t n_max, const std::vector<long>& ks,
                                            const std::vector<Rational>& ys = {Rational(0), Rational(1, 2),
                                                                               Rational(-1, 3)});

/// T3.18 and T3.19 against gen_pb_poly.
std::vector<IdentityReport> verify_theorem3(std::size_t n_max, const std::vector<long>& ks);

using Bounds = std::pair<Rational, Rational>;
std::vector<Bounds> default_integral_bounds();

/// T4.20 for 0 <= l <= n+1, T4.21 over the given integration bounds.
std::vector<IdentityReport> verify_theorem4(std::size_t n_max, const std::vector<long>& ks,
                                            const std::vector<Bounds>& bounds = default_integral_bounds());

/// B_n(x+y,1,b,b) = 1/2 sum_k C(n,k) [B_k(y,1,b,b) + B_k(y+1,1,b,b)] E_{n-k}(x,1,b,b)
/// for each k1 and y0, symbolic in X and Lb, plus a symbolic-y pass.
std::vector<IdentityReport> verify_theorem5(std::size_t n_max, const std::vector<long>& k1s,
                                            const std::vector<Rational>& ys = {Rational(0), Rational(1, 2),
                                                                               Rational(-1, 3)});

/// B_n(x) = sum_{k != 1} C(n,k) B_k E_{n-k}(x) with B_1 = -1/2 numbers.
std::vector<IdentityReport> verify_corollary1(std::size_t n_max);

}  // namespace polybern
