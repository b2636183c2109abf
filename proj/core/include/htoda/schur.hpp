#pragma once

#include "htoda/partition.hpp"
#include "htoda/tseries.hpp"

namespace htoda {

// Complete homogeneous polynomial h_m as a series in t (or tbar when
// barred), defined by sum_m h_m z^m = exp(sum_k t_k z^k); computed from the
// recurrence m h_m = sum_{k=1}^m k t_k h_{m-k}.
TSeries complete_homog(int m, int D, bool barred = false);

// Schur polynomial s_lambda in the t (or tbar) variables via the
// Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
TSeries schur(const Partition& lambda, int D, bool barred = false);

// Principal specialization t = (1, 0, 0, ...): dim(lambda) / |lambda|!.
Rat schur_principal(const Partition& lambda);

// s_lambda with every variable negated; equals (-1)^{|lambda|} s_{lambda'}.
TSeries schur_neg(const Partition& lambda, int D, bool barred = false);

}  // namespace htoda
