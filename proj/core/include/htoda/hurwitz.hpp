#pragma once

#include <vector>

#include "htoda/partition.hpp"
#include "htoda/tseries.hpp"

namespace htoda {

// Limits for the enumerative cross-check over symmetric-group tuples;
// exceeding them raises resource_error.
struct BruteBounds {
  int max_degree = 6;
  int max_profiles = 4;
};

// Weighted count of branched covers with the given ramification profiles,
// computed from the character sum
//   H_d = sum_{|lambda|=d} (dim lambda / d!)^2 prod_k f_lambda(mu_k).
// Every profile must be a partition of d.
Rat hurwitz_burnside(int d, const std::vector<Partition>& profiles);

// Same number by direct enumeration: (1/d!) times the number of tuples
// (sigma_1, ..., sigma_r) with sigma_k in the class of mu_k and product id.
Rat hurwitz_bruteforce(int d, const std::vector<Partition>& profiles,
                       const BruteBounds& bounds = {});

// r simple branch points (class (2, 1^{d-2})) plus one profile mu.
Rat simple_hurwitz(int d, int r, const Partition& mu);

// Monomial prod_k t_{mu_k} attached to a cycle type, and the integer factor
// prod_k mu_k relating it to the power sum p_mu = prod_k (mu_k t_{mu_k}).
Monomial cycle_monomial(const Partition& mu, bool barred = false);
Int cycle_factor(const Partition& mu);
TSeries power_sum(const Partition& mu, int D, bool barred = false);

// Schur polynomial through the character expansion
// sum_mu chi_lambda(mu) / z_mu p_mu; independent route for cross-checks.
TSeries frobenius_schur(const Partition& lambda, int D, bool barred = false);

// Generating series over partitions of size at most D, with beta kept to
// order nbeta (exclusive):
//   Z_simple = sum (dim/|lambda|!) e^{beta kappa/2} Q^{|lambda|} s_lambda[t]
//   Z_double = sum e^{beta kappa/2} Q^{|lambda|} s_lambda[t] s_lambda[-tbar]
TSeries z_simple(int D, int nbeta);
TSeries z_double(int D, int nbeta);

// Cut-and-join operator
//   M0 = 1/2 sum_{k,l} (k l t_k t_l d/dt_{k+l}
//                       + (k+l) t_{k+l} d^2/dt_k dt_l)
// and its exponential exp(beta M0) applied to f, beta kept below nbeta.
TSeries cut_and_join(const TSeries& f);
TSeries exp_cut_and_join(const TSeries& f, int nbeta);

// Closed forms the exponential representations must reproduce:
// exp(Q t_1) and exp(-sum_k Q^k k t_k tbar_k), both within degree D.
TSeries exp_qt1(int D, int nbeta);
TSeries exp_diag_pairing(int D, int nbeta);

// Reads a cover count back out of a generating series: the coefficient of
// beta^r Q^d (monomial of mu) in Z equals H * (prod mu_k) / r!.
Rat genfun_hurwitz_coeff(const TSeries& z, int r, int d, const Partition& mu);

}  // namespace htoda
