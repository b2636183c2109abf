#pragma once

#include "htoda/report.hpp"

namespace htoda {

// Bounds for the invariant suites.  Defaults complete in minutes.
struct VerifyOptions {
  int d_oracle = 5;      // Burnside vs direct enumeration cap
  int D_series = 5;      // truncation for series-level identities
  int n_beta = 4;        // beta order for generating-series checks
  int d_max_fock = 8;    // operator matrices cover |lambda| <= d_max_fock
  long charge_lo = -3;
  long charge_hi = 3;
  int D_solver = 5;      // string-equation solution degree
  unsigned seed = 1;     // randomized ring properties
  // Test hook: flips one kappa value inside the antisymmetry check so the
  // failure shows up there and nowhere else.
  bool fault_kappa_sign = false;
};

CheckReport verify_combinat(const VerifyOptions& opts);
CheckReport verify_series_ring(const VerifyOptions& opts);
CheckReport verify_schur(const VerifyOptions& opts);
CheckReport verify_hurwitz(const VerifyOptions& opts);
CheckReport verify_fock(const VerifyOptions& opts);
CheckReport verify_string(const VerifyOptions& opts);
CheckReport verify_free_energy(const VerifyOptions& opts);

// All of the above with "module/" prefixes on the check names.
CheckReport verify_all(const VerifyOptions& opts);

}  // namespace htoda
