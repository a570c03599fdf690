#include "polybern/verify.hpp"

#include <algorithm>
#include <array>
#include <future>

#include "polybern/euler.hpp"
#include "polybern/poly_bernoulli.hpp"
#include "polybern/power_series.hpp"
#include "polybern/series_gf.hpp"

namespace polybern {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 9> kSuites{{
    {Suite::all, "all"},
    {Suite::T1, "T1"},
    {Suite::T2, "T2"},
    {Suite::T3, "T3"},
    {Suite::T4, "T4"},
    {Suite::T5, "T5"},
    {Suite::C1, "C1"},
    {Suite::euler, "euler"},
    {Suite::oracle, "oracle"},
}};

std::vector<IdentityReport> run_single(Suite suite, const VerifyOptions& o) {
  switch (suite) {
    case Suite::T1: return verify_theorem1(o.n_max, o.ks, Theorem1Options{o.seed, 3, o.order_margin});
    case Suite::T2: return verify_theorem2(o.n_max, o.ks);
    case Suite::T3: return verify_theorem3(o.n_max, o.ks);
    case Suite::T4: return verify_theorem4(o.n_max, o.ks);
    case Suite::T5: return verify_theorem5(o.n_max, o.ks);
    case Suite::C1: return verify_corollary1(o.n_max);
    case Suite::euler: return verify_euler_identities(o.n_max);
    case Suite::oracle: return verify_oracle(o);
    case Suite::all: break;
  }
  return {};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuites) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  for (const auto& [suite, n] : kSuites) {
    if (suite == s) return n;
  }
  return "?";
}

std::vector<IdentityReport> verify_oracle(const VerifyOptions& o) {
  const std::size_t order = o.n_max + o.order_margin;
  const IdentityRange range{o.n_max, o.ks, order};

  ReportBuilder numbers(IdentityId::Oracle, "B_n^(k) closed form = n! [t^n] Li_k(1-e^-t)/(1-e^-t)", range);
  ReportBuilder polys(IdentityId::Oracle, "B_n^(k)(x) = n! [t^n] Li_k(1-e^-t)/(1-e^-t) e^(xt)", range);
  for (long k : o.ks) {
    const auto gf = gf_poly_bernoulli(k, order);
    const auto gf_x = lift(gf) * ps_exp_linear(MultiPoly::var(Var::X), order);
    for (std::size_t n = 0; n <= o.n_max; ++n) {
      numbers.check(n, k, poly_bernoulli(n, k), egf_coefficient(gf, n));
      polys.check(n, k, poly_bernoulli_poly(n, k), egf_coefficient(gf_x, n));
    }
  }

  std::vector<long> square;
  for (std::size_t k = 0; k <= o.n_max; ++k) square.push_back(static_cast<long>(k));
  ReportBuilder negative(IdentityId::Oracle,
                         "B_n^(-k) = sum_j (j!)^2 S(n+1,j+1) S(k+1,j+1) = general formula at -k = series; "
                         "duality and positive integrality",
                         IdentityRange{o.n_max, square, order});
  for (std::size_t k = 0; k <= o.n_max; ++k) {
    const long kk = static_cast<long>(k);
    const auto gf = gf_poly_bernoulli(-kk, order);
    for (std::size_t n = 0; n <= o.n_max; ++n) {
      const Rational value = poly_bernoulli_negative(n, k);
      negative.check(n, -kk, value, poly_bernoulli(n, -kk), "against the general formula");
      negative.check(n, -kk, value, egf_coefficient(gf, n), "against the series");
      negative.check(n, -kk, value, poly_bernoulli_negative(k, n), "duality");
      if (!value.is_integer() || value.sign() <= 0) {
        negative.fail(n, -kk, "value " + value.str() + " is not a positive integer");
      }
    }
  }

  std::vector<long> positive;
  std::copy_if(o.ks.begin(), o.ks.end(), std::back_inserter(positive), [](long k) { return k >= 1; });
  ReportBuilder nested(IdentityId::Oracle, "nested-integral series = Li_k(1-e^-t)/(1-e^-t)",
                       IdentityRange{o.n_max, positive, order});
  for (long k : positive) {
    const auto a = gf_iterated_integral(k, order);
    const auto b = gf_poly_bernoulli(k, order);
    for (std::size_t n = 0; n <= order; ++n) nested.check(n, k, a[n], b[n]);
  }

  ReportBuilder classical(IdentityId::Oracle, "t/(e^t-1) numbers agree with B_n^(1) except B_1 = -1/2",
                          IdentityRange{o.n_max, {1}, order});
  const auto bern = gf_bernoulli(order);
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    const Rational expected = n == 1 ? -poly_bernoulli(1, 1) : poly_bernoulli(n, 1);
    classical.check(n, 1, egf_coefficient(bern, n), expected);
  }

  std::vector<IdentityReport> out;
  for (auto* r : {&numbers, &polys, &negative, &nested, &classical}) out.push_back(std::move(*r).finish());
  return out;
}

std::vector<IdentityReport> run_suite(Suite suite, const VerifyOptions& options) {
  if (suite != Suite::all) return run_single(suite, options);

  const std::array<Suite, 8> order{Suite::oracle, Suite::euler, Suite::T1, Suite::T2,
                                   Suite::T3,     Suite::T4,    Suite::T5, Suite::C1};
  std::array<std::vector<IdentityReport>, order.size()> results;
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < order.size(); ++i) results[i] = run_single(order[i], options);
  } else {
    std::array<std::future<std::vector<IdentityReport>>, order.size()> pending;
    for (std::size_t i = 0; i < order.size(); ++i) {
      pending[i] = std::async(std::launch::async, run_single, order[i], std::cref(options));
    }
    for (std::size_t i = 0; i < order.size(); ++i) results[i] = pending[i].get();
  }
  std::vector<IdentityReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace polybern
