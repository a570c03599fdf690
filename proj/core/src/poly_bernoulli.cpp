#include "polybern/poly_bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "polybern/power_series.hpp"
#include "polybern/series_gf.hpp"

namespace polybern {

PolyBernoulliCache::PolyBernoulliCache(std::size_t n_cap) : n_cap_(n_cap) {
  stirling_.reserve(n_cap + 1);
  stirling_.push_back({Rational(1)});
  for (std::size_t n = 1; n <= n_cap; ++n) {
    const auto& prev = stirling_.back();
    std::vector<Rational> row(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
      Rational s = m < n ? prev[m] * Rational(static_cast<long>(m)) : Rational(0);
      s += prev[m - 1];
      row[m] = std::move(s);
    }
    stirling_.push_back(std::move(row));
  }
}

const Rational& PolyBernoulliCache::stirling2(std::size_t n, std::size_t m) const {
  static const Rational kZero(0);
  if (n > n_cap_) {
    throw std::out_of_range("Stirling index " + std::to_string(n) + " exceeds cache cap " +
                            std::to_string(n_cap_));
  }
  if (m > n) return kZero;
  return stirling_[n][m];
}

Rational PolyBernoulliCache::poly_bernoulli(std::size_t n, long k) {
  const auto key = std::make_pair(n, k);
  {
    std::shared_lock lock(mutex_);
    if (auto it = pb_.find(key); it != pb_.end()) return it->second;
  }
  Rational sum;
  Rational fact(1);  // (m-1)!
  for (std::size_t m = 1; m <= n + 1; ++m) {
    if (m > 1) fact *= Rational(static_cast<long>(m - 1));
    Rational term = fact * stirling2(n, m - 1) * Rational(static_cast<long>(m)).pow(-k);
    if ((m - 1) % 2 == 1) term = -term;
    sum += term;
  }
  if (n % 2 == 1) sum = -sum;
  std::unique_lock lock(mutex_);
  return pb_.try_emplace(key, std::move(sum)).first->second;
}

PolyBernoulliCache& default_cache() {
  static PolyBernoulliCache cache;
  return cache;
}

Rational stirling2(std::size_t n, std::size_t m) { return default_cache().stirling2(n, m); }

Rational poly_bernoulli(std::size_t n, long k) { return default_cache().poly_bernoulli(n, k); }

Rational poly_bernoulli_negative(std::size_t n, std::size_t k) {
  const auto& cache = default_cache();
  Rational sum;
  for (std::size_t j = 0; j <= std::min(n, k); ++j) {
    const Rational f = factorial(static_cast<unsigned>(j));
    sum += f * f * cache.stirling2(n + 1, j + 1) * cache.stirling2(k + 1, j + 1);
  }
  return sum;
}

MultiPoly poly_bernoulli_poly(std::size_t n, long k) {
  MultiPoly out;
  for (std::size_t j = 0; j <= n; ++j) {
    const Rational c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * poly_bernoulli(j, k);
    out += MultiPoly::term(c, Monomial::of(Var::X, static_cast<unsigned>(n - j)));
  }
  return out;
}

Rational classical_bernoulli(std::size_t n) { return egf_coefficient(gf_bernoulli(n), n); }

MultiPoly classical_bernoulli_poly(std::size_t n) {
  const auto gf = lift(gf_bernoulli(n)) * ps_exp_linear(MultiPoly::var(Var::X), n);
  return egf_coefficient(gf, n);
}

}  // namespace polybern
