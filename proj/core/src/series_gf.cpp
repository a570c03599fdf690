#include "polybern/series_gf.hpp"

namespace polybern {

namespace {

// e^t - 1 truncated at the given order.
RationalSeries exp_minus_one(std::size_t order) {
  return ps_exp_linear(Rational(1), order) - RationalSeries::constant(Rational(1), order);
}

}  // namespace

RationalSeries polylog_series(long k, std::size_t order) {
  std::vector<Rational> coeffs(order + 1);
  for (std::size_t m = 1; m <= order; ++m) {
    coeffs[m] = Rational(static_cast<long>(m)).pow(-k);
  }
  return RationalSeries(std::move(coeffs), order);
}

RationalSeries one_minus_exp_neg(const Rational& s, std::size_t order) {
  return RationalSeries::constant(Rational(1), order) - ps_exp_linear(-s, order);
}

RationalSeries gf_poly_bernoulli(long k, std::size_t order) {
  // Numerator and denominator both have valuation 1, so work one order up.
  const std::size_t work = order + 1;
  const auto u = one_minus_exp_neg(Rational(1), work);
  return ps_div(ps_compose(polylog_series(k, work), u), u);
}

RationalSeries gf_iterated_integral(long k, std::size_t order) {
  if (k < 1) throw SeriesError("iterated-integral form requires k >= 1");
  const std::size_t work = order + 1;
  const auto denom = exp_minus_one(work);
  auto s = ps_div(RationalSeries::monomial(Rational(1), 1, work), denom);
  for (long j = 2; j <= k; ++j) {
    s = ps_div(ps_integrate(s), denom);
  }
  return ps_exp_linear(Rational(1), order) * s;
}

RationalSeries gf_bernoulli(std::size_t order) {
  const std::size_t work = order + 1;
  return ps_div(RationalSeries::monomial(Rational(1), 1, work), exp_minus_one(work));
}

}  // namespace polybern
