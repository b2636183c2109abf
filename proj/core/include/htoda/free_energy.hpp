#pragma once

#include <map>
#include <vector>

#include "htoda/tseries.hpp"

namespace htoda {

// Genus tower of the double generating series: log Z = sum_n hbar^{2n-2} F_n
// once t is rescaled by hbar.  Every F_n is a beta-truncated series with
// t, tbar and Q content.
struct FreeEnergyTower {
  int n_max = 0;
  int D = 0;
  int n_beta = 0;
  std::vector<TSeries> F;  // F[0..n_max]
};

// Solves the coupled beta-flow equations
//   dF_n/dbeta = 1/2 sum k l t_k t_l dF_n/dt_{k+l}
//              + 1/2 sum (k+l) t_{k+l} d^2 F_{n-1}/dt_k dt_l
//              + 1/2 sum (k+l) t_{k+l} sum_{m=0}^{n} dF_m/dt_k dF_{n-m}/dt_l
// order by order in beta from F_0|_{beta=0} = -sum_k k Q^k t_k tbar_k and
// F_n|_{beta=0} = 0 for n >= 1 (F_{-1} = 0 throughout).
FreeEnergyTower solve_tower(int n_max, int D, int n_beta);

// Right-hand side of the flow for index n given the tower; exposed so tests
// can assert the residual dF_n/dbeta - rhs vanishes identically.
TSeries tower_rhs(const FreeEnergyTower& tower, int n);

// F_n minus (beta=0 seed + beta-integral of the right-hand side), which is
// identically zero exactly when F_n solves the flow at every kept order.
TSeries tower_residual(const FreeEnergyTower& tower, int n);

// The independent route: expand
//   Z_resc = sum_lambda e^{hbar beta kappa/2} Q^{|lambda|}
//            s_lambda[t/hbar] s_lambda[-tbar/hbar],
// where t/hbar rescales every time variable, so a monomial with v variable
// factors and j powers of beta sits at hbar^{j-v}.  hbar is a bounded
// Laurent parameter (exponents clipped to [-2D, hi]); then take log.  Keys
// are hbar exponents.
std::map<int, TSeries> oracle_hbar_expansion(int D, int n_beta, int hi);
std::map<int, TSeries> oracle_log_hbar(int D, int n_beta, int hi);

// Coefficient of hbar^{2n-2} in log Z_resc, the oracle value of F_n.
TSeries oracle_genus(int D, int n_beta, int n);

// F = beta s^3/6 + (s^2/2) log Q + F_0 with e^{beta s} Q folded into B.
// log Q never enters ring arithmetic; its coefficient rides along as a
// labeled side value for reports.
struct FullFreeEnergy {
  TSeries series;
  ParamScalar logq_coeff;
};
FullFreeEnergy assemble_full_free_energy(const FreeEnergyTower& tower);

// Substitutes tbar_1 = -1, tbar_k = 0 (k >= 2) in every F_n, which turns
// the double tower into the simple one.
std::vector<TSeries> simple_specialization(const FreeEnergyTower& tower);

// Same specialization computed from scratch on the lambda-sum side:
//   sum_lambda e^{hbar beta kappa/2} Q^{|lambda|} hbar^{-|lambda|}
//   (dim lambda/|lambda|!) s_lambda[t/hbar],
// logged and windowed exactly like oracle_log_hbar; the fixed leg behaves
// as |lambda| unit parts, hence the extra hbar^{-|lambda|}.
std::map<int, TSeries> simple_oracle_log_hbar(int D, int n_beta, int hi);

}  // namespace htoda
