#include "doctest.h"

#include <vector>

#include "htoda/hurwitz.hpp"
#include "htoda/partition.hpp"
#include "htoda/rational.hpp"
#include "htoda/schur.hpp"
#include "htoda/tseries.hpp"
#include "htoda/verify.hpp"

using namespace htoda;

namespace {

TSeries t(int D, int k) { return TSeries::var_t(D, k); }

}  // namespace

TEST_CASE("complete homogeneous polynomials") {
  int D = 3;
  CHECK(complete_homog(0, D) == TSeries::one(D));
  CHECK(complete_homog(1, D) == t(D, 1));
  CHECK(complete_homog(2, D) ==
        t(D, 1) * t(D, 1) * TSeries::constant(D, ParamScalar(rat(1, 2))) +
            t(D, 2));
  CHECK(complete_homog(3, D) ==
        t(D, 1) * t(D, 1) * t(D, 1) * TSeries::constant(D, ParamScalar(rat(1, 6))) +
            t(D, 1) * t(D, 2) + t(D, 3));
  // The barred flavor lives in the tbar variables.
  CHECK(complete_homog(1, D, true) == TSeries::var_tb(D, 1));
}

TEST_CASE("schur polynomials in closed form") {
  int D = 3;
  CHECK(schur(Partition::parse("[]"), D) == TSeries::one(D));
  CHECK(schur(Partition({1}), D) == t(D, 1));
  CHECK(schur(Partition({2}), D) ==
        t(D, 1) * t(D, 1) * TSeries::constant(D, ParamScalar(rat(1, 2))) +
            t(D, 2));
  CHECK(schur(Partition({1, 1}), D) ==
        t(D, 1) * t(D, 1) * TSeries::constant(D, ParamScalar(rat(1, 2))) -
            t(D, 2));
  CHECK(schur(Partition({2, 1}), D) ==
        t(D, 1) * t(D, 1) * t(D, 1) * TSeries::constant(D, ParamScalar(rat(1, 3))) -
            t(D, 3));
}

TEST_CASE("schur via characters matches the determinant route") {
  int D = 4;
  for (int d = 0; d <= 4; ++d)
    for (const Partition& lam : partitions_of(d)) {
      CHECK(frobenius_schur(lam, D) == schur(lam, D));
      CHECK(frobenius_schur(lam, D, true) == schur(lam, D, true));
    }
}

TEST_CASE("variable negation transposes the shape") {
  int D = 5;
  for (int d = 0; d <= 5; ++d)
    for (const Partition& lam : partitions_of(d)) {
      Rat sign = d % 2 == 0 ? Rat(1) : Rat(-1);
      CHECK(schur_neg(lam, D) == schur(lam.transpose(), D).mul_rat(sign));
    }
}

TEST_CASE("principal specialization") {
  CHECK(schur_principal(Partition::parse("[]")) == Rat(1));
  CHECK(schur_principal(Partition({1})) == Rat(1));
  CHECK(schur_principal(Partition({2, 1})) == rat(1, 3));   // dim 2 over 3!
  CHECK(schur_principal(Partition({3, 1})) == rat(1, 8));   // dim 3 over 4!
  CHECK(schur_principal(Partition({2, 2})) == rat(1, 12));  // dim 2 over 4!
}

TEST_CASE("cut-and-join acts diagonally on schur polynomials") {
  int D = 5;
  for (int d = 1; d <= 5; ++d)
    for (const Partition& lam : partitions_of(d))
      CHECK(cut_and_join(schur(lam, D)) ==
            schur(lam, D).mul_rat(rat(kappa(lam), 2)));
  // Concrete non-eigenvector images.
  CHECK(cut_and_join(t(D, 1) * t(D, 1)) == t(D, 2).mul_rat(2));
  CHECK(cut_and_join(t(D, 2)) ==
        t(D, 1) * t(D, 1) * TSeries::constant(D, ParamScalar(rat(1, 2))));
  CHECK(cut_and_join(TSeries::one(D)).is_zero());
}

TEST_CASE("pinned cover counts") {
  CHECK(hurwitz_burnside(2, {Partition({2}), Partition({2})}) == rat(1, 2));
  CHECK(hurwitz_burnside(3, {Partition({3}), Partition({3})}) == rat(1, 3));
  CHECK(hurwitz_burnside(1, {}) == Rat(1));
  // With no branch points the count is 1/d! for every degree.
  for (int d = 1; d <= 5; ++d)
    CHECK(hurwitz_burnside(d, {}) == Rat(1) / Rat(factorial(d)));
}

TEST_CASE("character sum agrees with direct enumeration") {
  for (int d = 1; d <= 4; ++d)
    for (const Partition& a : partitions_of(d))
      for (const Partition& b : partitions_of(d)) {
        std::vector<Partition> profiles{a, b};
        CHECK(hurwitz_burnside(d, profiles) == hurwitz_bruteforce(d, profiles));
      }
  std::vector<Partition> triple{Partition({3}), Partition({2, 1}),
                                Partition({2, 1})};
  CHECK(hurwitz_burnside(3, triple) == hurwitz_bruteforce(3, triple));
}

TEST_CASE("profile validation and enumeration limits") {
  CHECK_THROWS_AS(hurwitz_burnside(3, {Partition({2})}), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_bruteforce(7, {Partition({7})}), resource_error);
  std::vector<Partition> five(5, Partition({2}));
  CHECK_THROWS_AS(hurwitz_bruteforce(2, five), resource_error);
}

TEST_CASE("simple branching wrapper") {
  CHECK(simple_hurwitz(2, 1, Partition({2})) == rat(1, 2));
  CHECK(simple_hurwitz(3, 2, Partition({3})) == Rat(1));
  // Same numbers through the tuple count over explicit profiles.
  CHECK(simple_hurwitz(3, 2, Partition({3})) ==
        hurwitz_bruteforce(3, {Partition({2, 1}), Partition({2, 1}),
                               Partition({3})}));
  CHECK(simple_hurwitz(4, 1, Partition({2, 1, 1})) ==
        hurwitz_bruteforce(4, {Partition({2, 1, 1}), Partition({2, 1, 1})}));
}

TEST_CASE("cover counts read back from the generating series") {
  TSeries z = z_simple(4, 3);
  CHECK(genfun_hurwitz_coeff(z, 1, 2, Partition({2})) == rat(1, 2));
  CHECK(genfun_hurwitz_coeff(z, 2, 3, Partition({3})) == Rat(1));
  for (int d = 1; d <= 4; ++d)
    for (const Partition& mu : partitions_of(d))
      CHECK(genfun_hurwitz_coeff(z, 0, d, mu) == simple_hurwitz(d, 0, mu));
}

TEST_CASE("generating series flow forms") {
  int D = 4, nb = 3;
  CHECK(z_simple(D, nb) == exp_cut_and_join(exp_qt1(D, nb), nb));
  CHECK(z_double(D, nb) == exp_cut_and_join(exp_diag_pairing(D, nb), nb));
  CHECK(z_double(D, nb).swap_vars() == z_double(D, nb).negate_beta());
  // At order beta^0 the flow is the identity, leaving the bare pairing: the
  // classical expansion of the two-variable exponential kernel.
  CHECK(z_double(5, 1) == exp_diag_pairing(5, 1));
}

TEST_CASE("power sums and cycle bookkeeping") {
  int D = 4;
  Partition mu({2, 1});
  CHECK(cycle_factor(mu) == Int(2));
  CHECK(power_sum(mu, D) == t(D, 2) * t(D, 1) * TSeries::constant(D, ParamScalar(Rat(2))));
  Monomial m = cycle_monomial(mu);
  TSeries direct = TSeries::zero(D);
  direct.set_coeff(m, ParamScalar::one());
  CHECK(t(D, 2) * t(D, 1) == direct);
}

TEST_CASE("invariant suites at reduced bounds") {
  VerifyOptions opts;
  opts.d_oracle = 3;
  opts.D_series = 4;
  opts.n_beta = 3;
  CHECK(verify_schur(opts).all_ok());
  CHECK(verify_hurwitz(opts).all_ok());
}
