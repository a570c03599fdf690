#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "polybern/multipoly.hpp"
#include "polybern/rational.hpp"

namespace polybern {

/// Memoized Stirling numbers of the second kind and poly-Bernoulli numbers.
///
/// The Stirling table covers 0 <= m <= n <= n_cap and is filled by the
/// recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1). Lookups past the cap throw
/// std::out_of_range. Readers share a lock; inserts are idempotent, so two
/// threads racing on the same (n,k) store equal values.
class PolyBernoulliCache {
 public:
  static constexpr std::size_t kDefaultCap = 64;

  explicit PolyBernoulliCache(std::size_t n_cap = kDefaultCap);

  std::size_t cap() const noexcept { return n_cap_; }

  const Rational& stirling2(std::size_t n, std::size_t m) const;

  /// B_n^{(k)} for any integer k via the Stirling-number closed form.
  Rational poly_bernoulli(std::size_t n, long k);

 private:
  std::size_t n_cap_;
  // Row n holds S(n, 0..n).
  std::vector<std::vector<Rational>> stirling_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::size_t, long>, Rational> pb_;
};

/// Process-wide cache used by the free functions below.
PolyBernoulliCache& default_cache();

/// Stirling number of the second kind; zero when m > n.
Rational stirling2(std::size_t n, std::size_t m);

/// B_n^{(k)} = (-1)^n sum_{m=1}^{n+1} (-1)^{m-1} (m-1)! S(n, m-1) / m^k,
/// applied to every integer k.
Rational poly_bernoulli(std::size_t n, long k);

/// B_n^{(-k)} = sum_{j=0}^{min(n,k)} (j!)^2 S(n+1, j+1) S(k+1, j+1).
Rational poly_bernoulli_negative(std::size_t n, std::size_t k);

/// B_n^{(k)}(X) = sum_j C(n,j) B_j^{(k)} X^{n-j}.
MultiPoly poly_bernoulli_poly(std::size_t n, long k);

/// Bernoulli numbers from t/(e^t - 1), so B_1 = -1/2. Not the same family
/// as poly_bernoulli(n, 1), which has B_1 = +1/2.
Rational classical_bernoulli(std::size_t n);

/// Bernoulli polynomial B_n(X) from t e^{Xt}/(e^t - 1).
MultiPoly classical_bernoulli_poly(std::size_t n);

}  // namespace polybern
