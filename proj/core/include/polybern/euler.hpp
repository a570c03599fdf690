#pragma once

#include <cstddef>
#include <vector>

#include "polybern/identity_report.hpp"
#include "polybern/multipoly.hpp"

namespace polybern {

/// E_n(X) from 2 e^{Xt} / (e^t + 1).
MultiPoly euler_poly(std::size_t n);
/// E_0(X) .. E_{n_max}(X) from a single series expansion.
std::vector<MultiPoly> euler_polys(std::size_t n_max);

/// E_n(x,a,b,c) from 2 c^{xt} / (b^t + a^t), a polynomial in X, La, Lb, Lc.
MultiPoly gen_euler_poly(std::size_t n);
std::vector<MultiPoly> gen_euler_polys(std::size_t n_max);

/// a = 1, c = b: La -> 0, Lc -> Lb.
Bindings euler_a1_c_eq_b();

/// Checks, for every k <= n_max:
///   E1: E_k(X+1) = sum_j C(k,j) E_j(X)
///   E2: E_k(X+1) + E_k(X) = 2 X^k
///   E3: E_k(X+1,1,b,b) + E_k(X,1,b,b) = 2 X^k Lb^k
/// and that the generalized family at (La, Lb, Lc) = (0, 1, 1) is the
/// classical one (reported under ORACLE).
std::vector<IdentityReport> verify_euler_identities(std::size_t n_max);

}  // namespace polybern
