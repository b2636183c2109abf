#pragma once

#include <map>
#include <string>
#include <vector>

#include "htoda/plaurent.hpp"
#include "htoda/report.hpp"

namespace htoda {

// Power-series solution of the classical string equations through weighted
// degree D.  Coefficients are polynomial in beta and Laurent in B = Q e^{beta s};
// neither bare Q nor bare s appears in them.  All maps are indexed 1..D.
struct StringSolution {
  int D = 0;
  // Largest barred time the family keeps: D in general, 1 in the reduced
  // family where only tbar_1 survives.
  int tbar_max = 0;
  TSeries ubar0;
  std::map<int, TSeries> u, ubar;            // Laurent coefficients of L, Lbar^{-1}
  std::map<int, TSeries> v, vbar;            // conjugate-series coefficients
  std::map<int, TSeries> alpha, alphabar;    // log L = log p + sum alpha_n p^{-n}, etc.
};

// L = p + sum_n u_n p^{1-n} on the window [-D, +D].
PLaurent build_L(const StringSolution& sol);
// Lbar^{-1} = ubar0 p^{-1} + sum_n ubar_n p^{n-1}.
PLaurent build_Lbar_inv(const StringSolution& sol);
// M = sum_n n t_n L^n + s + sum_n v_n L^{-n}.
PLaurent build_M(const StringSolution& sol);
// Mbar = -sum_{n<=tbar_max} n tbar_n Lbar^{-n} + s + sum_n vbar_n Lbar^n.
PLaurent build_Mbar(const StringSolution& sol);

// Degree-by-degree solution of the string equations: at each weighted
// degree, alpha_n = -beta sum_{k>=n} k tbar_k (Lbar^{-k})_{-n} and
// alphabar_n = beta sum_{k>=n} k t_k (L^k)_n close on lower-degree data,
// and ubar0 = B exp(sum_k k alpha_k alphabar_k).  v_n and vbar_n then come
// from residues of the logarithmic decomposition.
StringSolution solve(int D);

// Reduced family tbar_k = tbar_1 delta_{k1}: the recursion collapses to the
// closed forms L = p e^{-beta tbar_1 ubar0 / p},
// (L^k)_n = (-k beta tbar_1 ubar0)^{k-n} / (k-n)!, and a scalar fixpoint for
// ubar0 alone.  Independent route from solve(); must agree with it after
// setting tbar_{k>=2} = 0.
StringSolution solve_case_i(int D);

// Sets tbar_k = 0 for k > keep in every coefficient series.
StringSolution restrict_tbar(const StringSolution& sol, int keep);
// Sets every t_k = 0 (the barred times survive).
StringSolution at_t_zero(const StringSolution& sol);

// Verifies, through degree D: both string-equation residuals vanish, the
// twisted canonical brackets {L, M} = L and {Lbar, Mbar} = Lbar, the
// logarithmic bracket {log L, log Lbar^{-1}} = beta, the k-th power of the
// first equation (k <= 3), the resummation identities
// sum k t_k (L^k)_0 = beta^{-1} sum n alpha_n alphabar_n =
// -sum k tbar_k (Lbar^{-k})_0, the scaling homogeneity of the coefficients,
// and the t_1 Lax flow dL/dt_1 = {(L)_{>=0}, L} through degree D-1.
CheckReport verify_string_equations(const StringSolution& sol);

// At t = 0 in the reduced family, c := beta tbar_1 ubar0 turns x := c L^{-1},
// y := c p^{-1} into the plane curve x = y e^y; checked exactly through
// p^{-D}, with L^{-1} produced by generic series inversion.
CheckReport lambert_form(const StringSolution& sol);

// Side-by-side of v_n against the t_n-derivative of the genus-zero free
// energy (with Q folded into B).  Reported, not asserted: the relation is
// expected from the general theory but not used anywhere else.
CheckLine compare_v_with_free_energy(const StringSolution& sol, int n,
                                     const TSeries& f0);

}  // namespace htoda
