#include "polybern/generalized.hpp"

#include <random>
#include <string>

#include "polybern/euler.hpp"
#include "polybern/poly_bernoulli.hpp"
#include "polybern/series_gf.hpp"

namespace polybern {

namespace {

const MultiPoly kX = MultiPoly::var(Var::X);
const MultiPoly kY = MultiPoly::var(Var::Y);
const MultiPoly kLa = MultiPoly::var(Var::La);
const MultiPoly kLb = MultiPoly::var(Var::Lb);
const MultiPoly kLc = MultiPoly::var(Var::Lc);

Rational binom(std::size_t n, std::size_t k) {
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

MultiPoly x_pow(std::size_t e) { return MultiPoly::term(Rational(1), Monomial::of(Var::X, static_cast<unsigned>(e))); }

// powers[e] = base^e for e <= n.
std::vector<MultiPoly> powers_of(const MultiPoly& base, std::size_t n) {
  std::vector<MultiPoly> out{MultiPoly(1)};
  for (std::size_t e = 1; e <= n; ++e) out.push_back(out.back() * base);
  return out;
}

std::vector<MultiPoly> gen_pb_polys(std::size_t n_max, long k) {
  std::vector<MultiPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(gen_pb_poly(n, k));
  return out;
}

std::string point_context(std::size_t index, const Point& p) {
  std::string s = "point #" + std::to_string(index) + " (";
  bool first = true;
  for (const auto& [v, value] : p) {
    if (!first) s += ", ";
    first = false;
    s += std::string(var_name(v)) + "=" + value.str();
  }
  return s + ")";
}

Rational require(const Point& point, Var v) {
  auto it = point.find(v);
  if (it == point.end()) throw UnboundIndeterminate(std::string(var_display_name(v)));
  return it->second;
}

}  // namespace

MultiPoly homogeneous_substitute(const MultiPoly& p, const MultiPoly& num, const MultiPoly& den, std::size_t n) {
  const auto num_pow = powers_of(num, n);
  const auto den_pow = powers_of(den, n);
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[Var::X];
    if (e > n) throw MathError("homogeneous substitution: X-degree exceeds the target degree");
    out += MultiPoly::term(c, m.with(Var::X, 0)) * num_pow[e] * den_pow[n - e];
  }
  return out;
}

MultiPoly gen_pb_numbers(std::size_t n, long k) {
  return homogeneous_substitute(poly_bernoulli_poly(n, k), -kLb, kLa + kLb, n);
}

MultiPoly gen_pb_numbers_sum(std::size_t n, long k) {
  const auto sum_pow = powers_of(kLa + kLb, n);
  const auto lb_pow = powers_of(kLb, n);
  MultiPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    Rational c = binom(n, i) * poly_bernoulli(i, k);
    if ((n - i) % 2 == 1) c = -c;
    out += sum_pow[i] * lb_pow[n - i] * c;
  }
  return out;
}

MultiPoly gen_pb_poly(std::size_t n, long k) {
  const auto lc_pow = powers_of(kLc, n);
  MultiPoly out;
  for (std::size_t l = 0; l <= n; ++l) {
    out += gen_pb_numbers(l, k) * lc_pow[n - l] * x_pow(n - l) * binom(n, l);
  }
  return out;
}

MultiPoly gen_pb_poly_homogeneous(std::size_t n, long k) {
  return homogeneous_substitute(poly_bernoulli_poly(n, k), kX * kLc - kLb, kLa + kLb, n);
}

MultiPoly gen_pb_poly_via_polynomials(std::size_t n, long k) {
  const auto lc_pow = powers_of(kLc, n);
  MultiPoly out;
  for (std::size_t l = 0; l <= n; ++l) {
    const MultiPoly inner = homogeneous_substitute(poly_bernoulli_poly(l, k), -kLb, kLa + kLb, l);
    out += inner * lc_pow[n - l] * x_pow(n - l) * binom(n, l);
  }
  return out;
}

MultiPoly gen_pb_poly_double_sum(std::size_t n, long k) {
  const auto lc_pow = powers_of(kLc, n);
  const auto lb_pow = powers_of(kLb, n);
  const auto sum_pow = powers_of(kLa + kLb, n);
  MultiPoly out;
  for (std::size_t l = 0; l <= n; ++l) {
    for (std::size_t j = 0; j <= l; ++j) {
      Rational c = binom(n, l) * binom(l, j) * poly_bernoulli(j, k);
      if ((l - j) % 2 == 1) c = -c;
      out += lc_pow[n - l] * lb_pow[l - j] * sum_pow[j] * x_pow(n - l) * c;
    }
  }
  return out;
}

RationalSeries gen_pb_numbers_series(long k, const Rational& la, const Rational& lb, std::size_t order) {
  const Rational s = la + lb;
  if (s.is_zero()) throw MathError("degenerate parameter point");
  // Both sides vanish at t = 0, so expand one order further.
  const std::size_t work = order + 1;
  const auto numerator = ps_compose(polylog_series(k, work), one_minus_exp_neg(s, work));
  const auto denominator = ps_exp_linear(lb, work) - ps_exp_linear(-la, work);
  return ps_div(numerator, denominator);
}

std::vector<Rational> gen_pb_numbers_oracle(std::size_t n_max, long k, const Rational& la, const Rational& lb,
                                            std::size_t order_margin) {
  const auto gf = gen_pb_numbers_series(k, la, lb, n_max + order_margin);
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(egf_coefficient(gf, n));
  return out;
}

RationalSeries gen_pb_poly_series(long k, const Point& point, std::size_t order) {
  const Rational la = require(point, Var::La);
  const Rational lb = require(point, Var::Lb);
  const Rational lc = require(point, Var::Lc);
  const Rational x = require(point, Var::X);
  return gen_pb_numbers_series(k, la, lb, order) * ps_exp_linear(x * lc, order);
}

std::vector<Rational> gen_pb_poly_oracle(std::size_t n_max, long k, const Point& point, std::size_t order_margin) {
  const auto gf = gen_pb_poly_series(k, point, n_max + order_margin);
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(egf_coefficient(gf, n));
  return out;
}

std::vector<Point> sample_points(std::uint64_t seed, std::size_t count) {
  // Raw engine output is fully specified by the standard; distributions are not.
  std::mt19937_64 engine(seed);
  auto draw = [&engine]() {
    const long num = static_cast<long>(engine() % 19) - 9;
    const long den = static_cast<long>(engine() % 7) + 1;
    return Rational(num, den);
  };
  std::vector<Point> out;
  while (out.size() < count) {
    Point p;
    p[Var::X] = draw();
    p[Var::La] = draw();
    p[Var::Lb] = draw();
    p[Var::Lc] = draw();
    if ((p[Var::La] + p[Var::Lb]).is_zero()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly pb_derivative(std::size_t n, long k, std::size_t l) {
  MultiPoly p = gen_pb_poly(n, k);
  for (std::size_t i = 0; i < l && !p.is_zero(); ++i) p = p.derivative(Var::X);
  return p;
}

MultiPoly pb_derivative_closed(std::size_t n, long k, std::size_t l) {
  if (l > n) return MultiPoly(0);
  const Rational falling = factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n - l));
  return gen_pb_poly(n - l, k) * kLc.pow(static_cast<unsigned>(l)) * falling;
}

MultiPoly pb_definite_integral(std::size_t n, long k, const Rational& alpha, const Rational& beta) {
  const MultiPoly antiderivative = gen_pb_poly(n, k).antiderivative(Var::X);
  return antiderivative.substitute({{Var::X, MultiPoly(beta)}}) - antiderivative.substitute({{Var::X, MultiPoly(alpha)}});
}

std::optional<MultiPoly> pb_integral_closed(std::size_t n, long k, const Rational& alpha, const Rational& beta) {
  const MultiPoly next = gen_pb_poly(n + 1, k);
  const MultiPoly bracket =
      next.substitute({{Var::X, MultiPoly(beta)}}) - next.substitute({{Var::X, MultiPoly(alpha)}});
  auto quotient = bracket.divide_by_var(Var::Lc);
  if (!quotient) return std::nullopt;
  return *quotient * Rational(1, static_cast<long>(n + 1));
}

std::vector<IdentityReport> verify_theorem1(std::size_t n_max, const std::vector<long>& ks,
                                            const Theorem1Options& options) {
  const std::size_t order = n_max + options.order_margin;
  const IdentityRange exact{n_max, ks, 0};
  const IdentityRange series{n_max, ks, order};
  const auto points = sample_points(options.seed, options.points);

  ReportBuilder r11(IdentityId::T1_11,
                    "B_n(a,b) = B_n(-ln b/(ln a+ln b)) (ln a+ln b)^n against the generating function at " +
                        std::to_string(points.size()) + " seeded points (seed " + std::to_string(options.seed) + ")",
                    series);
  ReportBuilder r12(IdentityId::T1_12, "B_n(a,b) = sum_i (-1)^(n-i) (ln a+ln b)^i (ln b)^(n-i) C(n,i) B_i", exact,
                    "sum taken from i=0 with summand B_i; the form starting at i=1 with summand B_n fails at n=0");
  ReportBuilder r13(IdentityId::T1_13,
                    "B_n(x;a,b,c) = sum_l C(n,l) (ln c)^(n-l) B_l(a,b) x^(n-l) against the generating function",
                    series);
  ReportBuilder r14(IdentityId::T1_14, "B_n(x+1;a,b,c) = B_n(x;ac,b/c,c)", exact,
                    "a -> ac, b -> b/c realized as ln a -> ln a + ln c, ln b -> ln b - ln c");
  ReportBuilder r15(IdentityId::T1_15, "B_n(t) = B_n(e^(t+1), e^(-t))", exact,
                    "t carried by X: ln a -> 1 + X, ln b -> -X");
  ReportBuilder r16(IdentityId::T1_16, "B_n(x,a,b,c) = (ln a+ln b)^n B_n((-ln b + x ln c)/(ln a+ln b))", exact);

  const Bindings shift_x{{Var::X, kX + MultiPoly(1)}};
  const Bindings shift_params{{Var::La, kLa + kLc}, {Var::Lb, kLb - kLc}};
  const Bindings classical_params{{Var::La, MultiPoly(1) + kX}, {Var::Lb, -kX}};
  const Bindings x_zero{{Var::X, MultiPoly(0)}};

  for (long k : ks) {
    std::vector<MultiPoly> numbers;
    std::vector<MultiPoly> polys;
    for (std::size_t n = 0; n <= n_max; ++n) {
      numbers.push_back(gen_pb_numbers(n, k));
      polys.push_back(gen_pb_poly(n, k));
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      r12.check(n, k, numbers[n], gen_pb_numbers_sum(n, k));
      r13.check(n, k, polys[n].substitute(x_zero), numbers[n], "x=0 reduces to the numbers");
      r14.check(n, k, polys[n].substitute(shift_x), polys[n].substitute(shift_params));
      r15.check(n, k, numbers[n].substitute(classical_params), poly_bernoulli_poly(n, k));
      r16.check(n, k, gen_pb_poly_homogeneous(n, k), polys[n]);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Point& p = points[i];
      const auto num_oracle =
          gen_pb_numbers_oracle(n_max, k, p.at(Var::La), p.at(Var::Lb), options.order_margin);
      const auto poly_oracle = gen_pb_poly_oracle(n_max, k, p, options.order_margin);
      for (std::size_t n = 0; n <= n_max; ++n) {
        r11.check(n, k, numbers[n].eval(p), num_oracle[n], point_context(i, p));
        r13.check(n, k, polys[n].eval(p), poly_oracle[n], point_context(i, p));
      }
    }
  }

  std::vector<IdentityReport> out;
  for (auto* r : {&r11, &r12, &r13, &r14, &r15, &r16}) out.push_back(std::move(*r).finish());
  return out;
}

std::vector<IdentityReport> verify_theorem2(std::size_t n_max, const std::vector<long>& ks,
                                            const std::vector<Rational>& ys) {
  std::string y_list;
  for (const auto& y : ys) y_list += (y_list.empty() ? "" : ", ") + y.str();
  ReportBuilder r17(IdentityId::T2_17,
                    "B_n(x+y) = sum_l C(n,l) (ln c)^(n-l) B_l(x) y^(n-l) = sum_l C(n,l) (ln c)^(n-l) B_l(y) x^(n-l)",
                    IdentityRange{n_max, ks, 0},
                    "y in {" + y_list + "} and symbolically through the auxiliary indeterminate Y");

  const auto lc_pow = powers_of(kLc, n_max);
  for (long k : ks) {
    const auto polys = gen_pb_polys(n_max, k);
    auto check_at = [&](std::size_t n, const MultiPoly& y, const std::string& ctx) {
      const MultiPoly lhs = polys[n].substitute({{Var::X, kX + y}});
      MultiPoly rhs_x;
      MultiPoly rhs_y;
      const auto y_pow = powers_of(y, n);
      for (std::size_t l = 0; l <= n; ++l) {
        const MultiPoly w = lc_pow[n - l] * binom(n, l);
        rhs_x += w * polys[l] * y_pow[n - l];
        rhs_y += w * polys[l].substitute({{Var::X, y}}) * x_pow(n - l);
      }
      r17.check(n, k, lhs, rhs_x, ctx + ", expansion in y");
      r17.check(n, k, lhs, rhs_y, ctx + ", expansion in x");
      return std::make_pair(rhs_x, rhs_y);
    };
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (const auto& y : ys) check_at(n, MultiPoly(y), "y=" + y.str());
      // Symbolic y, then both expansions compared at a sample (x, y).
      auto [rhs_x, rhs_y] = check_at(n, kY, "y=Y");
      const Bindings sample{{Var::X, MultiPoly(Rational(1, 2))}, {Var::Y, MultiPoly(Rational(-1, 3))}};
      r17.check(n, k, rhs_x.substitute(sample), rhs_y.substitute(sample), "x=1/2, y=-1/3");
    }
  }
  std::vector<IdentityReport> out;
  out.push_back(std::move(r17).finish());
  return out;
}

std::vector<IdentityReport> verify_theorem3(std::size_t n_max, const std::vector<long>& ks) {
  const IdentityRange range{n_max, ks, 0};
  ReportBuilder r18(IdentityId::T3_18,
                    "B_n(x;a,b,c) = sum_l C(n,l) (ln c)^(n-l) B_l(-ln b/(ln a+ln b)) (ln a+ln b)^l x^(n-l)", range);
  ReportBuilder r19(IdentityId::T3_19,
                    "B_n(x;a,b,c) = sum_l sum_j (-1)^(l-j) C(n,l) C(l,j) (ln c)^(n-l) (ln b)^(l-j) "
                    "(ln a+ln b)^j B_j x^(n-l)",
                    range, "trailing power taken as x^(n-l); x^(n-k) does not match the expansion");
  for (long k : ks) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const MultiPoly p = gen_pb_poly(n, k);
      r18.check(n, k, gen_pb_poly_via_polynomials(n, k), p);
      r19.check(n, k, gen_pb_poly_double_sum(n, k), p);
    }
  }
  std::vector<IdentityReport> out;
  out.push_back(std::move(r18).finish());
  out.push_back(std::move(r19).finish());
  return out;
}

std::vector<Bounds> default_integral_bounds() {
  return {{Rational(0), Rational(1)}, {Rational(-1, 2), Rational(1, 3)}, {Rational(2, 5), Rational(2, 5)}};
}

std::vector<IdentityReport> verify_theorem4(std::size_t n_max, const std::vector<long>& ks,
                                            const std::vector<Bounds>& bounds) {
  std::string bound_list;
  for (const auto& [a, b] : bounds) bound_list += (bound_list.empty() ? "" : ", ") + ("(" + a.str() + ", " + b.str() + ")");
  ReportBuilder r20(IdentityId::T4_20, "d^l/dx^l B_n(x,a,b,c) = n!/(n-l)! (ln c)^l B_{n-l}(x,a,b,c)",
                    IdentityRange{n_max, ks, 0}, "0 <= l <= n+1; l = n+1 must give 0");
  ReportBuilder r21(IdentityId::T4_21,
                    "int_alpha^beta B_n(x,a,b,c) dx = [B_{n+1}(beta) - B_{n+1}(alpha)] / ((n+1) ln c)",
                    IdentityRange{n_max, ks, 0},
                    "bounds " + bound_list + "; division by ln c is exact polynomial division");
  for (long k : ks) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t l = 0; l <= n + 1; ++l) {
        r20.check(n, k, pb_derivative(n, k, l), pb_derivative_closed(n, k, l), "l=" + std::to_string(l));
      }
      for (const auto& [alpha, beta] : bounds) {
        const std::string ctx = "alpha=" + alpha.str() + ", beta=" + beta.str();
        const auto closed = pb_integral_closed(n, k, alpha, beta);
        if (!closed) {
          r21.fail(n, k, "B_{n+1}(beta) - B_{n+1}(alpha) is not divisible by ln c", ctx);
          continue;
        }
        r21.check(n, k, pb_definite_integral(n, k, alpha, beta), *closed, ctx);
      }
    }
  }
  std::vector<IdentityReport> out;
  out.push_back(std::move(r20).finish());
  out.push_back(std::move(r21).finish());
  return out;
}

std::vector<IdentityReport> verify_theorem5(std::size_t n_max, const std::vector<long>& k1s,
                                            const std::vector<Rational>& ys) {
  std::string y_list;
  for (const auto& y : ys) y_list += (y_list.empty() ? "" : ", ") + y.str();
  ReportBuilder r5(IdentityId::T5,
                   "B_n(x+y,1,b,b) = 1/2 sum_k C(n,k) [B_k(y,1,b,b) + B_k(y+1,1,b,b)] E_{n-k}(x,1,b,b)",
                   IdentityRange{n_max, k1s, 0},
                   "summand uses B_k (the index-free B_n form is false); y in {" + y_list +
                       "} and symbolic Y; a = 1, c = b as ln a -> 0, ln c -> ln b");

  const Bindings a1_bc = euler_a1_c_eq_b();
  std::vector<MultiPoly> euler;
  for (const auto& e : gen_euler_polys(n_max)) euler.push_back(e.substitute(a1_bc));

  for (long k1 : k1s) {
    std::vector<MultiPoly> pb;
    for (const auto& p : gen_pb_polys(n_max, k1)) pb.push_back(p.substitute(a1_bc));
    std::vector<std::pair<MultiPoly, std::string>> y_values;
    for (const auto& y : ys) y_values.emplace_back(MultiPoly(y), "y=" + y.str());
    y_values.emplace_back(kY, "y=Y");
    for (const auto& [y, ctx] : y_values) {
      for (std::size_t n = 0; n <= n_max; ++n) {
        const MultiPoly lhs = pb[n].substitute({{Var::X, kX + y}});
        MultiPoly rhs;
        for (std::size_t k = 0; k <= n; ++k) {
          const MultiPoly bracket =
              pb[k].substitute({{Var::X, y}}) + pb[k].substitute({{Var::X, y + MultiPoly(1)}});
          rhs += bracket * euler[n - k] * binom(n, k);
        }
        r5.check(n, k1, lhs, rhs * Rational(1, 2), ctx);
      }
    }
  }
  std::vector<IdentityReport> out;
  out.push_back(std::move(r5).finish());
  return out;
}

std::vector<IdentityReport> verify_corollary1(std::size_t n_max) {
  ReportBuilder c1(IdentityId::C1, "B_n(x) = sum_{k != 1} C(n,k) B_k E_{n-k}(x)", IdentityRange{n_max, {}, n_max},
                   "classical Bernoulli numbers and polynomials with B_1 = -1/2");
  const auto bernoulli = gf_bernoulli(n_max);
  const auto euler = euler_polys(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == 1) continue;
      rhs += euler[n - k] * (binom(n, k) * egf_coefficient(bernoulli, k));
    }
    c1.check(n, 1, classical_bernoulli_poly(n), rhs);
  }
  std::vector<IdentityReport> out;
  out.push_back(std::move(c1).finish());
  return out;
}

}  // namespace polybern
