#pragma once

#include "htoda/partition.hpp"
#include "htoda/rational.hpp"

namespace htoda {

// Irreducible character chi_lambda evaluated on the class of cycle type mu,
// by the Murnaghan-Nakayama border-strip recursion (memoized, thread-safe).
// Requires |lambda| == |mu|.
Int character(const Partition& lambda, const Partition& mu);

// Central character f_lambda(mu) = chi_lambda(mu) * |C(mu)| / dim(lambda).
// f on the identity class is 1; on the single-transposition class kappa/2.
Rat f_class(const Partition& lambda, const Partition& mu);

}  // namespace htoda
