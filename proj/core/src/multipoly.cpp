#include "polybern/multipoly.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace polybern {

namespace {

constexpr std::array<std::string_view, kNumVars> kInternalNames{"X", "La", "Lb", "Lc", "Y"};
constexpr std::array<std::string_view, kNumVars> kDisplayNames{"x", "ln(a)", "ln(b)", "ln(c)", "y"};
// ln(.) symbols lead in display output so that "ln(c)*x" reads naturally.
constexpr std::array<Var, kNumVars> kDisplayFactorOrder{Var::La, Var::Lb, Var::Lc, Var::X, Var::Y};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

std::string render_monomial(const Monomial& m, RenderStyle style) {
  std::string out;
  const auto& order = style == RenderStyle::internal ? kAllVars : kDisplayFactorOrder;
  const auto& names = style == RenderStyle::internal ? kInternalNames : kDisplayNames;
  for (Var v : order) {
    const unsigned e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[idx(v)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly result;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      MultiPoly t = parse_term();
      result += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  MultiPoly parse_term() {
    skip_ws();
    Rational coeff(1);
    Monomial mono;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      digits();
      if (peek() == '/') {
        ++pos_;
        digits();
      }
      coeff = Rational::parse(text_.substr(start, pos_ - start));
      skip_ws();
      if (peek() != '*') return MultiPoly(coeff);
      ++pos_;
    }
    for (;;) {
      skip_ws();
      const Var v = parse_symbol();
      unsigned e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = static_cast<unsigned>(std::stoul(std::string(digits())));
      }
      mono = mono * Monomial::of(v, e);
      have_factor = true;
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!have_factor) fail("empty term");
    return MultiPoly::term(coeff, mono);
  }

  Var parse_symbol() {
    for (Var v : kAllVars) {
      for (std::string_view name : {kInternalNames[idx(v)], kDisplayNames[idx(v)]}) {
        if (text_.substr(pos_, name.size()) == name) {
          // Reject prefixes of longer identifiers ("Lab").
          const std::size_t end = pos_ + name.size();
          if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) continue;
          pos_ = end;
          return v;
        }
      }
    }
    fail("unknown symbol");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view var_name(Var v) { return kInternalNames[idx(v)]; }
std::string_view var_display_name(Var v) { return kDisplayNames[idx(v)]; }

Monomial Monomial::of(Var v, unsigned exponent) { return Monomial{}.with(v, exponent); }

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::with(Var v, unsigned exponent) const {
  Monomial m = *this;
  m.exps_[idx(v)] = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    m.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  }
  return m;
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  for (Var v : kAllVars) {
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Var v) { return term(Rational(1), Monomial::of(v)); }

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  // Graded order puts the highest total degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool MultiPoly::is_homogeneous(unsigned d) const {
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned j) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m[v] == j) out.add_term(m.with(v, 0), c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const Bindings& bindings) const {
  if (bindings.empty()) return *this;
  // powers[v][e] = binding(v)^e, grown on demand.
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  std::array<const MultiPoly*, kNumVars> bound{};
  for (const auto& [v, value] : bindings) {
    bound[idx(v)] = &value;
    powers[idx(v)].emplace_back(1);
  }
  auto power_of = [&](Var v, unsigned e) -> const MultiPoly& {
    auto& table = powers[idx(v)];
    while (table.size() <= e) table.push_back(table.back() * *bound[idx(v)]);
    return table[e];
  };

  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial passthrough;
    MultiPoly factor(c);
    for (Var v : kAllVars) {
      const unsigned e = m[v];
      if (e == 0) continue;
      if (bound[idx(v)] != nullptr) {
        factor *= power_of(v, e);
      } else {
        passthrough = passthrough.with(v, e);
      }
    }
    if (!passthrough.is_constant()) factor *= term(Rational(1), passthrough);
    out += factor;
  }
  return out;
}

Rational MultiPoly::eval(const Point& point) const {
  for (Var v : kAllVars) {
    if (mentions(v) && !point.contains(v)) throw UnboundIndeterminate(std::string(var_display_name(v)));
  }
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (Var v : kAllVars) {
      if (m[v] > 0) t *= point.at(v).pow(m[v]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[v];
    if (e == 0) continue;
    out.add_term(m.with(v, e - 1), c * Rational(static_cast<long>(e)));
  }
  return out;
}

MultiPoly MultiPoly::antiderivative(Var v) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[v];
    out.add_term(m.with(v, e + 1), c / Rational(static_cast<long>(e + 1)));
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_by_var(Var v) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) return std::nullopt;
    out.add_term(m.with(v, m[v] - 1), c);
  }
  return out;
}

std::string MultiPoly::str(RenderStyle style) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    if (m.is_constant()) {
      out += magnitude.str();
    } else if (magnitude.is_one()) {
      out += render_monomial(m, style);
    } else {
      out += magnitude.str() + "*" + render_monomial(m, style);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly poly_arith(PolyOp op, const MultiPoly& p, const MultiPoly& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  throw MathError("unknown polynomial operation");
}

}  // namespace polybern
