#include "polybern/identity_report.hpp"

#include <array>
#include <sstream>

namespace polybern {

std::string_view identity_name(IdentityId id) {
  static constexpr std::array<std::string_view, 17> kNames{
      "T1.11", "T1.12", "T1.13", "T1.14", "T1.15", "T1.16", "T2.17", "T3.18", "T3.19",
      "T4.20", "T4.21", "T5",    "C1",    "E1",    "E2",    "E3",    "ORACLE"};
  return kNames.at(static_cast<std::size_t>(id));
}

ReportBuilder::ReportBuilder(IdentityId id, std::string title, IdentityRange range, std::string note) {
  report_.id = id;
  report_.title = std::move(title);
  report_.range = std::move(range);
  report_.note = std::move(note);
}

bool ReportBuilder::check(std::size_t n, long k, const MultiPoly& lhs, const MultiPoly& rhs, std::string context) {
  ++report_.checks;
  if (lhs == rhs) return true;
  if (!report_.witness) report_.witness = Witness{n, k, (lhs - rhs).str(), std::move(context)};
  return false;
}

bool ReportBuilder::check(std::size_t n, long k, const Rational& lhs, const Rational& rhs, std::string context) {
  ++report_.checks;
  if (lhs == rhs) return true;
  if (!report_.witness) report_.witness = Witness{n, k, (lhs - rhs).str(), std::move(context)};
  return false;
}

void ReportBuilder::fail(std::size_t n, long k, std::string description, std::string context) {
  ++report_.checks;
  if (!report_.witness) report_.witness = Witness{n, k, std::move(description), std::move(context)};
}

IdentityReport ReportBuilder::finish() && { return std::move(report_); }

std::string format_k_values(const std::vector<long>& ks) {
  if (ks.empty()) return "{}";
  bool contiguous = true;
  for (std::size_t i = 1; i < ks.size(); ++i) contiguous = contiguous && ks[i] == ks[i - 1] + 1;
  std::ostringstream os;
  if (contiguous && ks.size() > 2) {
    os << '[' << ks.front() << ".." << ks.back() << ']';
  } else {
    os << '{';
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? ", " : "") << ks[i];
    os << '}';
  }
  return os.str();
}

std::string format_report(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << identity_name(r.id) << ' ' << r.title << " (n<=" << r.range.n_max;
  if (!r.range.k_values.empty()) os << ", k in " << format_k_values(r.range.k_values);
  if (r.range.order > 0) os << ", order " << r.range.order;
  os << ", " << r.checks << " checks)";
  if (r.witness) {
    os << "\n  witness: n=" << r.witness->n << " k=" << r.witness->k;
    if (!r.witness->context.empty()) os << ' ' << r.witness->context;
    os << "\n  difference: " << r.witness->difference;
  }
  if (!r.note.empty()) os << "\n  note: " << r.note;
  return os.str();
}

}  // namespace polybern
