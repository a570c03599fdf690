#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polybern/generalized.hpp"
#include "polybern/identity_report.hpp"

namespace polybern {

enum class Suite { all, T1, T2, T3, T4, T5, C1, euler, oracle };

/// Accepts "all", "T1".."T5", "C1", "euler", "oracle".
std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct VerifyOptions {
  std::size_t n_max = 10;
  std::vector<long> ks{-3, -2, -1, 0, 1, 2, 3};
  std::uint64_t seed = 42;
  std::size_t order_margin = kDefaultOrderMargin;
  /// Suite::all runs its suites concurrently when jobs > 1.
  std::size_t jobs = 1;
};

/// Closed forms against series expansions:
///  - B_n^{(k)} against Li_k(1-e^{-t})/(1-e^{-t}) for k in ks,
///  - B_n^{(k)}(x) against that series times e^{xt},
///  - negative-index sum against the general formula, n<->k duality and
///    positivity on the square grid 0 <= n, k <= n_max,
///  - the nested-integral series for every k >= 1 in ks,
///  - t/(e^t-1) numbers against B_n^{(1)}.
std::vector<IdentityReport> verify_oracle(const VerifyOptions& options);

/// Runs one suite, or every suite for Suite::all. Report order depends only
/// on the suite list, never on thread completion order.
std::vector<IdentityReport> run_suite(Suite suite, const VerifyOptions& options);

}  // namespace polybern
