#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polybern/generalized.hpp"
#include "polybern/poly_bernoulli.hpp"
#include "polybern/series_gf.hpp"
#include "polybern/verify.hpp"

namespace polybern::cli {

namespace {

using Json = nlohmann::ordered_json;

// Negative-index sums touch S(n+1, .), so stay one below the Stirling cap.
constexpr long kMaxIndex = static_cast<long>(PolyBernoulliCache::kDefaultCap) - 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Config {
  long n = 0;
  long k = 0;
  long n_max = 10;
  long k_min = -3;
  long k_max = 3;
  bool generalized = false;
  std::string format = "text";
  std::string suite = "all";
  std::uint64_t seed = 42;
  long order_margin = static_cast<long>(kDefaultOrderMargin);
  long jobs = 1;
  // eval
  std::optional<long> eval_poly;
  std::optional<long> eval_number;
  std::optional<std::string> ln_a, ln_b, ln_c, x;
  bool show_series = false;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("unknown output format '" + s + "'");
}

void check_index(const char* what, long v, long lo) {
  if (v < lo || v > kMaxIndex) {
    throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(kMaxIndex) +
                     "], got " + std::to_string(v));
  }
}

void check_k(long k) {
  if (k < -kMaxIndex || k > kMaxIndex) {
    throw UsageError("k must lie in [" + std::to_string(-kMaxIndex) + ", " + std::to_string(kMaxIndex) + "]");
  }
}

std::vector<long> k_range(const Config& c) {
  check_k(c.k_min);
  check_k(c.k_max);
  if (c.k_min > c.k_max) {
    throw UsageError("empty k range [" + std::to_string(c.k_min) + ", " + std::to_string(c.k_max) + "]");
  }
  std::vector<long> ks;
  for (long k = c.k_min; k <= c.k_max; ++k) ks.push_back(k);
  return ks;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit_value(std::ostream& out, Format f, const std::string& id, long n, long k, const std::string& value) {
  switch (f) {
    case Format::text: out << value << '\n'; break;
    case Format::json: out << Json{{"id", id}, {"n", n}, {"k", k}, {"value", value}}.dump() << '\n'; break;
    case Format::csv: out << "id,n,k,value\n" << id << ',' << n << ',' << k << ',' << csv_field(value) << '\n'; break;
  }
}

int cmd_number(const Config& c, std::ostream& out) {
  check_index("n", c.n, 0);
  check_k(c.k);
  emit_value(out, parse_format(c.format), "B", c.n, c.k, poly_bernoulli(static_cast<std::size_t>(c.n), c.k).str());
  return kSuccess;
}

int cmd_polynomial(const Config& c, std::ostream& out) {
  check_index("n", c.n, 0);
  check_k(c.k);
  const auto n = static_cast<std::size_t>(c.n);
  const MultiPoly p = c.generalized ? gen_pb_poly(n, c.k) : poly_bernoulli_poly(n, c.k);
  emit_value(out, parse_format(c.format), c.generalized ? "B(x,a,b,c)" : "B(x)", c.n, c.k,
             p.str(RenderStyle::display));
  return kSuccess;
}

int cmd_table(const Config& c, std::ostream& out) {
  check_index("nmax", c.n_max, 0);
  const auto ks = k_range(c);
  const Format f = parse_format(c.format);
  if (f == Format::csv) out << "k,n,value\n";
  for (long k : ks) {
    for (long n = 0; n <= c.n_max; ++n) {
      const std::string value = poly_bernoulli(static_cast<std::size_t>(n), k).str();
      switch (f) {
        case Format::text: out << "B_" << n << "^(" << k << ") = " << value << '\n'; break;
        case Format::json: out << Json{{"id", "B"}, {"n", n}, {"k", k}, {"value", value}}.dump() << '\n'; break;
        case Format::csv: out << k << ',' << n << ',' << value << '\n'; break;
      }
    }
  }
  return kSuccess;
}

Json report_json(const IdentityReport& r) {
  Json j{{"id", std::string(identity_name(r.id))},
         {"title", r.title},
         {"n", r.range.n_max},
         {"k", r.range.k_values},
         {"order", r.range.order},
         {"checks", r.checks},
         {"status", r.status()}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    j["witness"] = Json{{"n", r.witness->n},
                        {"k", r.witness->k},
                        {"context", r.witness->context},
                        {"difference", r.witness->difference}};
  }
  return j;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const auto suite = parse_suite(c.suite);
  if (!suite) throw UsageError("unknown suite '" + c.suite + "'");
  check_index("nmax", c.n_max, 0);
  if (c.order_margin < 0) throw UsageError("order margin must be non-negative");
  if (c.jobs < 1) throw UsageError("jobs must be at least 1");
  VerifyOptions options;
  options.n_max = static_cast<std::size_t>(c.n_max);
  options.ks = k_range(c);
  options.seed = c.seed;
  options.order_margin = static_cast<std::size_t>(c.order_margin);
  options.jobs = static_cast<std::size_t>(c.jobs);

  const Format f = parse_format(c.format);
  const auto reports = run_suite(*suite, options);
  const auto passed = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); }));

  if (f == Format::csv) out << "id,n,k,order,checks,status,witness\n";
  for (const auto& r : reports) {
    switch (f) {
      case Format::text: out << format_report(r) << '\n'; break;
      case Format::json: out << report_json(r).dump() << '\n'; break;
      case Format::csv: {
        std::string witness;
        if (r.witness) {
          witness = "n=" + std::to_string(r.witness->n) + " k=" + std::to_string(r.witness->k) + " " +
                    r.witness->context + ": " + r.witness->difference;
        }
        out << identity_name(r.id) << ',' << r.range.n_max << ',' << csv_field(format_k_values(r.range.k_values))
            << ',' << r.range.order << ',' << r.checks << ',' << r.status() << ',' << csv_field(witness) << '\n';
        break;
      }
    }
  }
  if (f == Format::text) out << passed << '/' << reports.size() << " identities verified\n";
  return passed == reports.size() ? kSuccess : kVerificationFailed;
}

Rational parse_binding(const std::optional<std::string>& text, const char* flag) {
  try {
    return Rational::parse(*text);
  } catch (const MathError& e) {
    throw UsageError(std::string("invalid value for ") + flag + ": " + e.what());
  }
}

int cmd_eval(const Config& c, std::ostream& out) {
  check_k(c.k);
  Point point;
  if (c.ln_a) point[Var::La] = parse_binding(c.ln_a, "--ln-a");
  if (c.ln_b) point[Var::Lb] = parse_binding(c.ln_b, "--ln-b");
  if (c.ln_c) point[Var::Lc] = parse_binding(c.ln_c, "--ln-c");
  if (c.x) point[Var::X] = parse_binding(c.x, "-x");
  if (c.order_margin < 0) throw UsageError("order margin must be non-negative");
  const auto margin = static_cast<std::size_t>(c.order_margin);

  if (c.eval_number) {
    check_index("number", *c.eval_number, 0);
    const auto n = static_cast<std::size_t>(*c.eval_number);
    if (!c.generalized) {
      if (c.show_series) out << "series: " << gf_poly_bernoulli(c.k, n + margin).str() << '\n';
      out << poly_bernoulli(n, c.k) << '\n';
      return kSuccess;
    }
    // Generalized numbers are read off the generating function at the point.
    for (Var v : {Var::La, Var::Lb}) {
      if (!point.contains(v)) throw UnboundIndeterminate(std::string(var_display_name(v)));
    }
    const auto series = gen_pb_numbers_series(c.k, point[Var::La], point[Var::Lb], n + margin);
    if (c.show_series) out << "series: " << series.str() << '\n';
    out << egf_coefficient(series, n) << '\n';
    return kSuccess;
  }

  check_index("poly", *c.eval_poly, 0);
  const auto n = static_cast<std::size_t>(*c.eval_poly);
  if (!c.generalized) {
    const MultiPoly p = poly_bernoulli_poly(n, c.k);
    if (c.show_series) {
      const Rational x = point.contains(Var::X) ? point[Var::X] : throw UnboundIndeterminate("x");
      out << "series: " << (gf_poly_bernoulli(c.k, n + margin) * ps_exp_linear(x, n + margin)).str() << '\n';
    }
    out << p.eval(point) << '\n';
    return kSuccess;
  }
  const MultiPoly p = gen_pb_poly(n, c.k);
  if (c.show_series) out << "series: " << gen_pb_poly_series(c.k, point, n + margin).str() << '\n';
  out << p.eval(point) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact poly-Bernoulli numbers, polynomials and their generalizations", "polybern"};
  app.require_subcommand(1);

  auto* number = app.add_subcommand("number", "Print the poly-Bernoulli number B_n^(k)");
  number->add_option("-n", c.n, "Index n >= 0")->required();
  number->add_option("-k", c.k, "Polylogarithm index (any integer)")->required();
  number->add_option("--format", c.format, "text, json or csv");

  auto* polynomial = app.add_subcommand("polynomial", "Print B_n^(k)(x) or B_n^(k)(x,a,b,c)");
  polynomial->add_option("-n", c.n, "Degree n >= 0")->required();
  polynomial->add_option("-k", c.k, "Polylogarithm index")->required();
  polynomial->add_flag("--generalized", c.generalized, "Polynomial in x, ln(a), ln(b), ln(c)");
  polynomial->add_option("--format", c.format, "text, json or csv");

  auto* table = app.add_subcommand("table", "Emit B_n^(k) for 0 <= n <= nmax, kmin <= k <= kmax");
  table->add_option("--nmax", c.n_max, "Largest n")->required();
  table->add_option("--kmin", c.k_min, "Smallest k")->required();
  table->add_option("--kmax", c.k_max, "Largest k")->required();
  table->add_option("--format", c.format, "text, json or csv");

  auto* verify = app.add_subcommand("verify", "Machine-check the identity suites");
  verify->add_option("--suite", c.suite, "all, T1, T2, T3, T4, T5, C1, euler or oracle");
  verify->add_option("--nmax", c.n_max, "Largest n checked");
  verify->add_option("--kmin", c.k_min, "Smallest k");
  verify->add_option("--kmax", c.k_max, "Largest k");
  verify->add_option("--seed", c.seed, "Seed for the random evaluation points");
  verify->add_option("--order-margin", c.order_margin, "Extra series coefficients in oracle runs");
  verify->add_option("--jobs", c.jobs, "Run suites concurrently when > 1");
  verify->add_option("--format", c.format, "text, json or csv");

  auto* eval = app.add_subcommand("eval", "Evaluate a number or polynomial exactly at a point");
  auto* poly_opt = eval->add_option("--poly", c.eval_poly, "Evaluate the degree-n polynomial");
  auto* number_opt = eval->add_option("--number", c.eval_number, "Evaluate the n-th number");
  poly_opt->excludes(number_opt);
  eval->add_option("-k", c.k, "Polylogarithm index")->required();
  eval->add_flag("--generalized", c.generalized, "Use the (a, b, c) family");
  eval->add_option("--ln-a", c.ln_a, "ln a as a rational");
  eval->add_option("--ln-b", c.ln_b, "ln b as a rational");
  eval->add_option("--ln-c", c.ln_c, "ln c as a rational");
  eval->add_option("-x", c.x, "x as a rational");
  eval->add_flag("--show-series", c.show_series, "Also print the generating series used");
  eval->add_option("--order-margin", c.order_margin, "Extra series coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (number->parsed()) return cmd_number(c, out);
    if (polynomial->parsed()) return cmd_polynomial(c, out);
    if (table->parsed()) return cmd_table(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (eval->parsed()) {
      if (!c.eval_poly && !c.eval_number) throw UsageError("eval needs --poly N or --number N");
      return cmd_eval(c, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace polybern::cli
