#pragma once

#include <cstddef>

#include "polybern/power_series.hpp"

namespace polybern {

/// Li_k(z) = sum_{m>=1} z^m / m^k truncated at z^order. For k <= 0 the
/// coefficients m^{-k} are integers.
RationalSeries polylog_series(long k, std::size_t order);

/// 1 - e^{-s t}, the argument at which Li_k is composed (s = 1 for the
/// classical family, s = ln a + ln b for the two-parameter family).
RationalSeries one_minus_exp_neg(const Rational& s, std::size_t order);

/// Li_k(1 - e^{-t}) / (1 - e^{-t}); n! [t^n] is B_n^{(k)}.
RationalSeries gf_poly_bernoulli(long k, std::size_t order);

/// The nested-integral form of the same generating function, valid for
/// k >= 1: s_1 = t/(e^t - 1), s_j = (e^t - 1)^{-1} * int_0^t s_{j-1},
/// result e^t * s_k. Throws SeriesError for k < 1.
RationalSeries gf_iterated_integral(long k, std::size_t order);

/// t / (e^t - 1): classical Bernoulli numbers with B_1 = -1/2.
RationalSeries gf_bernoulli(std::size_t order);

}  // namespace polybern
