#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polybern/multipoly.hpp"

namespace polybern {

enum class IdentityId {
  T1_11, T1_12, T1_13, T1_14, T1_15, T1_16,
  T2_17,
  T3_18, T3_19,
  T4_20, T4_21,
  T5,
  C1,
  E1, E2, E3,
  Oracle,
};

/// "T1.11", ..., "C1", "E3", "ORACLE".
std::string_view identity_name(IdentityId id);

/// First failing instance of an identity.
struct Witness {
  std::size_t n = 0;
  long k = 0;
  /// lhs - rhs in internal rendering, or a description when no difference
  /// polynomial exists (e.g. a divisibility failure).
  std::string difference;
  /// Extra coordinates of the failing instance ("y=1/2", "point #2", ...).
  std::string context;
};

struct IdentityRange {
  std::size_t n_max = 0;
  std::vector<long> k_values;
  /// Series truncation order used by oracle checks, 0 when none.
  std::size_t order = 0;
};

/// Outcome of checking one identity over a parameter range. The identity
/// passed exactly when no witness was recorded.
struct IdentityReport {
  IdentityId id = IdentityId::Oracle;
  std::string title;
  IdentityRange range;
  /// Free-form remark, e.g. which index convention was used.
  std::string note;
  std::size_t checks = 0;
  std::optional<Witness> witness;

  bool passed() const noexcept { return !witness.has_value(); }
  std::string status() const { return passed() ? "pass" : "fail"; }
};

/// Accumulates comparisons for one report, keeping the first failure.
class ReportBuilder {
 public:
  ReportBuilder(IdentityId id, std::string title, IdentityRange range, std::string note = {});

  /// Returns true when lhs == rhs.
  bool check(std::size_t n, long k, const MultiPoly& lhs, const MultiPoly& rhs, std::string context = {});
  bool check(std::size_t n, long k, const Rational& lhs, const Rational& rhs, std::string context = {});
  /// Records a failure that has no polynomial difference.
  void fail(std::size_t n, long k, std::string description, std::string context = {});

  IdentityReport finish() &&;

 private:
  IdentityReport report_;
};

/// "[PASS] T1.11 <title> (n<=10, k in [-3..3], order 12, 1234 checks)" plus
/// witness and note lines.
std::string format_report(const IdentityReport& r);

/// "[-3..3]" for a contiguous list, "{1, 2}" otherwise.
std::string format_k_values(const std::vector<long>& ks);

}  // namespace polybern
