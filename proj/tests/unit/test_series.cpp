#include "doctest.h"

#include "htoda/param_scalar.hpp"
#include "htoda/plaurent.hpp"
#include "htoda/series_json.hpp"
#include "htoda/tseries.hpp"
#include "htoda/verify.hpp"

using namespace htoda;

namespace {

constexpr int kPoly = 0;

ParamScalar beta() { return ParamScalar::monomial(1, ParamExp{1, 0, 0, 0}, kPoly); }
ParamScalar s_sym() { return ParamScalar::monomial(1, ParamExp{0, 1, 0, 0}, kPoly); }
ParamScalar q_sym() { return ParamScalar::monomial(1, ParamExp{0, 0, 1, 0}, kPoly); }

}  // namespace

TEST_CASE("parameter scalars form a commutative ring") {
  ParamScalar a = beta() + s_sym();
  ParamScalar sq = a * a;
  ParamScalar expect = beta() * beta() + (beta() * s_sym()).mul_rat(2) +
                       s_sym() * s_sym();
  CHECK(sq == expect);
  CHECK((a - a).is_zero());
  CHECK(ParamScalar(rat(3, 4)).constant_part() == rat(3, 4));
}

TEST_CASE("monomial inversion and the exponential in beta") {
  ParamScalar m = ParamScalar::monomial(rat(2), ParamExp{0, 0, 3, -1}, kPoly);
  CHECK(m.is_invertible_monomial());
  CHECK(m * m.inverse() == ParamScalar::one());
  CHECK_FALSE((q_sym() + ParamScalar::one()).is_invertible_monomial());

  ParamScalar e = ParamScalar::exp_beta(rat(1), 3);
  ParamScalar expect = ParamScalar::one() + beta().with_mode(3) +
                       (beta() * beta()).mul_rat(rat(1, 2)).with_mode(3);
  CHECK(e == expect);
}

TEST_CASE("s-derivation knows the Q e^{beta s} combination") {
  // d/ds B = beta B, d/ds s = 1, d/ds Q = 0
  ParamScalar b = ParamScalar::monomial(1, ParamExp{0, 0, 0, 1}, kPoly);
  CHECK(b.derive_s() == beta() * b);
  CHECK(s_sym().derive_s() == ParamScalar::one());
  CHECK(q_sym().derive_s().is_zero());
  ParamScalar mixed = s_sym() * b;
  CHECK(mixed.derive_s() == b + s_sym() * beta() * b);
}

TEST_CASE("time series arithmetic with weighted truncation") {
  int D = 3;
  TSeries t1 = TSeries::var_t(D, 1);
  TSeries one = TSeries::one(D);
  CHECK((one + t1) * (one - t1) + t1 * t1 == one);
  // t_3 carries weight three, so any product with it dies at D = 3
  TSeries t3 = TSeries::var_t(D, 3);
  CHECK((t3 * t1).is_zero());
  CHECK(t1 * t1 * t1 * t1 == TSeries::zero(D));
  CHECK(t1.derive_t(1) == one);
  CHECK(t3.derive_t(3) == one);
  CHECK(t3.derive_t(2).is_zero());
}

TEST_CASE("series exponential against a hand expansion") {
  int D = 3;
  TSeries t1 = TSeries::var_t(D, 1);
  TSeries e = exp_series(t1);
  TSeries expect = TSeries::one(D) + t1 + (t1 * t1).div_rat(2) +
                   (t1 * t1 * t1).div_rat(6);
  CHECK(e == expect);
  LogUnit lu = log_unit(e);
  CHECK(lu.lead == ParamScalar::one());
  CHECK(lu.series == t1);
}

TEST_CASE("variable swap exchanges the two families") {
  int D = 2;
  TSeries f = TSeries::var_t(D, 2) + TSeries::var_tb(D, 1);
  TSeries g = f.swap_vars();
  CHECK(g == TSeries::var_tb(D, 2) + TSeries::var_t(D, 1));
  CHECK(g.swap_vars() == f);
}

TEST_CASE("p-Laurent residues and the Poisson bracket") {
  int D = 3, floor = -4;
  PLaurent pinv = PLaurent::p_power(D, floor, -1);
  CHECK(pinv.residue() == TSeries::one(D));
  CHECK(PLaurent::p_power(D, floor, 2).residue().is_zero());

  PLaurent p1 = PLaurent::p_power(D, floor, 1);
  PLaurent sc = PLaurent::constant(D, floor, s_sym());
  // {p, s} = p d_p p * d_s s = p
  CHECK(poisson(p1, sc) == p1);
  CHECK(poisson(sc, p1) == -p1);
  PLaurent p5 = PLaurent::p_power(D, floor, 2);
  CHECK(p5.derive_p() == PLaurent::p_power(D, floor, 1).mul_scalar(
                             ParamScalar(rat(2))));
}

TEST_CASE("laurent unit decomposition inverts a shifted monomial") {
  int D = 3, floor = -5;
  TSeries t1 = TSeries::var_t(D, 1);
  // f = p (1 + t1 p^{-1})
  PLaurent f = PLaurent::p_power(D, floor, 1) +
               PLaurent::constant(D, floor, ParamScalar::one()).mul_series(t1);
  LaurentUnit u = decompose_unit(f);
  CHECK(u.lead == ParamScalar::one());
  CHECK(u.lead_exp == 1);
  CHECK(f * u.inverse == PLaurent::constant(D, floor, ParamScalar::one()));
}

TEST_CASE("json round trip preserves a series exactly") {
  int D = 3;
  TSeries f = TSeries::var_t(D, 2).mul_scalar(
                  ParamScalar::monomial(rat(7, 3), ParamExp{1, 0, 2, 0}, 4)) +
              TSeries::var_tb(D, 1);
  std::string text = series_to_string(f);
  CHECK(series_from_string(text) == f);
}

TEST_CASE("malformed json inputs are rejected") {
  CHECK_THROWS_AS(series_from_string("{\"D\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(
      series_from_string("{\"D\": 2, \"params\": {\"beta_mode\": \"poly\"}, "
                         "\"terms\": [{\"t\": [[0, 1]], \"tbar\": [], "
                         "\"coeff\": []}]}"),
      std::invalid_argument);
  // weighted degree of the monomial exceeds the stated truncation
  CHECK_THROWS_AS(
      series_from_string("{\"D\": 2, \"params\": {\"beta_mode\": \"poly\"}, "
                         "\"terms\": [{\"t\": [[3, 1]], \"tbar\": [], "
                         "\"coeff\": [{\"e_beta\": 0, \"e_s\": 0, \"e_Q\": 0, "
                         "\"e_B\": 0, \"value\": \"1\"}]}]}"),
      std::invalid_argument);
}

TEST_CASE("series ring property suite at reduced bounds") {
  VerifyOptions opts;
  opts.D_series = 3;
  opts.n_beta = 3;
  opts.seed = 7;
  CHECK(verify_series_ring(opts).all_ok());
}
