#include "polybern/euler.hpp"

#include "polybern/power_series.hpp"

namespace polybern {

namespace {

const MultiPoly kX = MultiPoly::var(Var::X);

// 2 e^{num t} / (e^{d1 t} + e^{d2 t}); the denominator starts with 2.
std::vector<MultiPoly> euler_family(const MultiPoly& num, const MultiPoly& d1, const MultiPoly& d2,
                                    std::size_t n_max) {
  const auto top = ps_exp_linear(num, n_max) * Rational(2);
  const auto bottom = ps_exp_linear(d1, n_max) + ps_exp_linear(d2, n_max);
  const auto gf = ps_div(top, bottom);
  std::vector<MultiPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(egf_coefficient(gf, n));
  return out;
}

}  // namespace

std::vector<MultiPoly> euler_polys(std::size_t n_max) {
  return euler_family(kX, MultiPoly(1), MultiPoly(0), n_max);
}

MultiPoly euler_poly(std::size_t n) { return euler_polys(n).back(); }

std::vector<MultiPoly> gen_euler_polys(std::size_t n_max) {
  return euler_family(kX * MultiPoly::var(Var::Lc), MultiPoly::var(Var::Lb), MultiPoly::var(Var::La), n_max);
}

MultiPoly gen_euler_poly(std::size_t n) { return gen_euler_polys(n).back(); }

Bindings euler_a1_c_eq_b() { return {{Var::La, MultiPoly(0)}, {Var::Lc, MultiPoly::var(Var::Lb)}}; }

std::vector<IdentityReport> verify_euler_identities(std::size_t n_max) {
  const IdentityRange range{n_max, {}, n_max};
  const auto classical = euler_polys(n_max);
  const auto generalized = gen_euler_polys(n_max);
  const Bindings shift{{Var::X, kX + MultiPoly(1)}};
  const Bindings a1_bc = euler_a1_c_eq_b();
  const MultiPoly lb = MultiPoly::var(Var::Lb);

  ReportBuilder e1(IdentityId::E1, "E_k(x+1) = sum_j C(k,j) E_j(x)", range);
  ReportBuilder e2(IdentityId::E2, "E_k(x+1) + E_k(x) = 2 x^k", range);
  ReportBuilder e3(IdentityId::E3, "E_k(x+1,1,b,b) + E_k(x,1,b,b) = 2 x^k (ln b)^k", range,
                   "b = c realized as the substitution ln c -> ln b");
  ReportBuilder specialization(IdentityId::Oracle, "E_k(x,1,e,e) equals the classical E_k(x)", range);

  for (std::size_t k = 0; k <= n_max; ++k) {
    const long kk = static_cast<long>(k);
    const MultiPoly shifted = classical[k].substitute(shift);

    MultiPoly sum;
    for (std::size_t j = 0; j <= k; ++j) {
      sum += classical[j] * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
    }
    e1.check(k, kk, shifted, sum);
    e2.check(k, kk, shifted + classical[k], MultiPoly(2) * kX.pow(static_cast<unsigned>(k)));

    const MultiPoly g = generalized[k].substitute(a1_bc);
    e3.check(k, kk, g.substitute(shift) + g, MultiPoly(2) * (kX * lb).pow(static_cast<unsigned>(k)));

    const MultiPoly at_e = generalized[k].substitute({{Var::La, MultiPoly(0)},
                                                     {Var::Lb, MultiPoly(1)},
                                                     {Var::Lc, MultiPoly(1)}});
    specialization.check(k, kk, at_e, classical[k]);
  }

  std::vector<IdentityReport> out;
  out.push_back(std::move(e1).finish());
  out.push_back(std::move(e2).finish());
  out.push_back(std::move(e3).finish());
  out.push_back(std::move(specialization).finish());
  return out;
}

}  // namespace polybern
