#include "doctest.h"

#include "htoda/free_energy.hpp"
#include "htoda/param_scalar.hpp"
#include "htoda/rational.hpp"
#include "htoda/string_equations.hpp"
#include "htoda/tseries.hpp"
#include "htoda/verify.hpp"

using namespace htoda;

namespace {

ParamScalar b_pow(int n) {
  return ParamScalar::monomial(Rat(1), ParamExp{0, 0, 0, n}, 0);
}

// beta^j B^n with rational coefficient
ParamScalar beta_b(const Rat& c, int j, int n) {
  return ParamScalar::monomial(c, ParamExp{j, 0, 0, n}, 0);
}

}  // namespace

TEST_CASE("solution starts from the dispersionless seed") {
  StringSolution sol = solve(3);
  CHECK(sol.D == 3);
  CHECK(sol.tbar_max == 3);
  // ubar0 = B + O(beta^2); the order-beta^2 term is a genuine correction.
  CHECK(sol.ubar0.drop_beta_at_or_above(1) ==
        TSeries::constant(3, b_pow(1)));
  CHECK_FALSE(sol.ubar0 == TSeries::constant(3, b_pow(1)));
  // u_n = -beta n tbar_n B^n + O(beta^2), ubar_n = beta n t_n B + O(beta^2).
  for (int n = 1; n <= 3; ++n) {
    CHECK(sol.u.at(n).drop_beta_at_or_above(2) ==
          TSeries::var_tb(3, n, beta_b(Rat(-n), 1, n)));
    CHECK(sol.ubar.at(n).drop_beta_at_or_above(2) ==
          TSeries::var_t(3, n, beta_b(Rat(n), 1, 1)));
  }
}

TEST_CASE("full verification battery passes") {
  StringSolution sol = solve(4);
  CheckReport rep = verify_string_equations(sol);
  CHECK_MESSAGE(rep.all_ok(), rep.str());
  // The battery covers both equations, both brackets, and the consistency
  // identities; pin the names so a silent drop of one check gets noticed.
  const char* expected[] = {
      "string-equation-residual", "string-equation-residual-bar",
      "bracket-L-M",              "bracket-Lbar-Mbar",
      "log-bracket-beta",         "power-identity-2",
      "power-identity-3",         "resummation-unbarred",
      "resummation-barred",       "leading-terms",
      "q-free-coefficients",      "scaling-homogeneity",
      "lax-flow-t1"};
  for (const char* name : expected) {
    bool found = false;
    for (const auto& line : rep.lines)
      if (line.name == name) found = true;
    CHECK_MESSAGE(found, name);
  }
}

TEST_CASE("a perturbed solution fails verification") {
  StringSolution sol = solve(3);
  sol.u.at(1) = sol.u.at(1) + TSeries::var_tb(3, 1, beta_b(rat(1, 7), 1, 1));
  CHECK_FALSE(verify_string_equations(sol).all_ok());
}

TEST_CASE("closed-form family matches the generic recursion") {
  StringSolution generic = restrict_tbar(solve(4), 1);
  StringSolution closed = solve_case_i(4);
  CHECK(closed.tbar_max == 1);
  CHECK(generic.tbar_max == 1);
  CHECK(closed.ubar0 == generic.ubar0);
  for (int n = 1; n <= 4; ++n) {
    CHECK(closed.u.at(n) == generic.u.at(n));
    CHECK(closed.ubar.at(n) == generic.ubar.at(n));
    CHECK(closed.v.at(n) == generic.v.at(n));
    CHECK(closed.vbar.at(n) == generic.vbar.at(n));
    CHECK(closed.alpha.at(n) == generic.alpha.at(n));
    CHECK(closed.alphabar.at(n) == generic.alphabar.at(n));
  }
  CheckReport rep = verify_string_equations(closed);
  CHECK_MESSAGE(rep.all_ok(), rep.str());
}

TEST_CASE("all times off leaves the bare lattice variable") {
  StringSolution rest = at_t_zero(solve_case_i(4));
  CHECK(rest.ubar0 == TSeries::constant(4, b_pow(1)));
  for (int n = 1; n <= 4; ++n) {
    // The barred coefficients are driven by the unbarred times and die with
    // them; the unbarred ones keep their tbar_1 content, which is exactly
    // what curls L into the exponential curve below.
    CHECK(rest.ubar.at(n).is_zero());
  }
  CHECK(rest.u.at(1) == TSeries::var_tb(4, 1, beta_b(Rat(-1), 1, 1)));
}

TEST_CASE("reduced family at t = 0 traces the exponential curve") {
  CheckReport rep = lambert_form(at_t_zero(solve_case_i(5)));
  CHECK_MESSAGE(rep.all_ok(), rep.str());
}

TEST_CASE("conjugate coefficients match the genus-zero energy") {
  StringSolution sol = solve(4);
  TSeries f0 = solve_tower(0, 4, 4).F.at(0);
  for (int n = 1; n <= 3; ++n) {
    CheckLine line = compare_v_with_free_energy(sol, n, f0);
    CHECK_MESSAGE(line.ok, line.detail);
  }
}

TEST_CASE("invariant suite at reduced bounds") {
  VerifyOptions opts;
  opts.D_solver = 3;
  CHECK(verify_string(opts).all_ok());
}
