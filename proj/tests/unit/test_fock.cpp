#include "doctest.h"

#include <memory>

#include "htoda/fock.hpp"
#include "htoda/hurwitz.hpp"
#include "htoda/partition.hpp"
#include "htoda/rational.hpp"
#include "htoda/schur.hpp"
#include "htoda/verify.hpp"

using namespace htoda;

namespace {

const WedgeState kVac{Partition(), 0};

}  // namespace

TEST_CASE("occupied levels of a basis vector") {
  CHECK(kVac.occupied(0));
  CHECK(kVac.occupied(-7));
  CHECK_FALSE(kVac.occupied(1));
  WedgeState excited{Partition({2, 1}), 0};  // levels 2, 0, -2, -3, ...
  CHECK(excited.occupied(2));
  CHECK_FALSE(excited.occupied(1));
  CHECK(excited.occupied(0));
  CHECK_FALSE(excited.occupied(-1));
  CHECK(excited.occupied(-2));
}

TEST_CASE("fermion modes move between labeled states") {
  ModeResult r = create_level(kVac, 1);
  WedgeState expect{Partition(), 1};
  CHECK(r.sign == 1);
  CHECK(r.state == expect);

  r = create_level(kVac, 2);
  expect = WedgeState{Partition({1}), 1};
  CHECK(r.sign == 1);
  CHECK(r.state == expect);

  r = annihilate_level(kVac, 0);
  expect = WedgeState{Partition(), -1};
  CHECK(r.sign == 1);
  CHECK(r.state == expect);

  r = annihilate_level(kVac, -1);
  expect = WedgeState{Partition({1}), -1};
  CHECK(r.sign == -1);  // one occupied level sits above the hole
  CHECK(r.state == expect);

  CHECK(create_level(kVac, 0).sign == 0);      // already filled
  CHECK(annihilate_level(kVac, 1).sign == 0);  // already empty
}

TEST_CASE("canonical anticommutation on basis vectors") {
  // psi_a psi*_a + psi*_a psi_a acts as the identity on every state.
  for (const WedgeState& st :
       {kVac, WedgeState{Partition({2, 1}), 0}, WedgeState{Partition({3}), -1}})
    for (long a = -3; a <= 3; ++a) {
      int total = 0;
      ModeResult up = create_level(st, a);
      if (up.sign != 0) {
        ModeResult down = annihilate_level(up.state, a);
        CHECK(down.state == st);
        total += up.sign * down.sign;
      }
      ModeResult down = annihilate_level(st, a);
      if (down.sign != 0) {
        ModeResult up2 = create_level(down.state, a);
        CHECK(up2.state == st);
        total += down.sign * up2.sign;
      }
      CHECK(total == 1);
    }
}

TEST_CASE("diagonal operators in closed form") {
  auto table = std::make_shared<PartitionTable>(4);
  for (long s = -1; s <= 1; ++s) {
    BilinearOp j0 = bilinear(charge_spec(), table, s);
    BilinearOp l0 = bilinear(energy_spec(), table, s);
    BilinearOp w0 = bilinear(energy_sq_spec(), table, s);
    BilinearOp m0 = bilinear(half_shift_energy_spec(), table, s);
    for (int d = 0; d <= 4; ++d)
      for (const Partition& lam : partitions_of(d)) {
        long sz = lam.size(), kap = kappa(lam);
        CHECK(j0.diagonal(lam) == ParamScalar(Rat(s)));
        CHECK(l0.diagonal(lam) == ParamScalar(Rat(sz) + rat(s * (s + 1), 2)));
        CHECK(w0.diagonal(lam) ==
              ParamScalar(Rat(kap) + Rat((2 * s + 1) * sz) +
                          rat(s * (s + 1) * (2 * s + 1), 6)));
        CHECK(m0.diagonal(lam) ==
              ParamScalar(rat(kap, 2) + Rat(s * sz) +
                          rat(4 * s * s * s - s, 24)));
      }
  }
  BilinearOp m0 = bilinear(half_shift_energy_spec(), table, 1);
  CHECK(m0.diagonal(Partition({1})) == ParamScalar(rat(9, 8)));
}

TEST_CASE("central term of the current bracket") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(cocycle(current_spec(m), current_spec(-m)) == ParamScalar(Rat(m)));
    CHECK(cocycle(current_spec(-m), current_spec(m)) == ParamScalar(Rat(-m)));
  }
  CHECK(cocycle(current_spec(1), current_spec(2)).is_zero());
  CHECK(cocycle(energy_spec(), current_spec(0)).is_zero());
}

TEST_CASE("quantized bracket equals matrix bracket plus center") {
  auto table = std::make_shared<PartitionTable>(5);
  long s = 0;
  // The shift matrices commute, so the bracket of opposite currents is pure
  // center: [J_1, J_{-1}] = Id.
  BilinearOp j1 = bilinear(current_spec(1), table, s);
  BilinearOp jm1 = bilinear(current_spec(-1), table, s);
  MatchReport m = agree_on_exact(op_commutator(j1, jm1), identity_op(table, s));
  CHECK_MESSAGE(m.ok, m.detail);
  // Energy grading: [L_0, J_{-k}] = k J_{-k}.
  BilinearOp l0 = bilinear(energy_spec(), table, s);
  for (int k = 1; k <= 2; ++k) {
    BilinearOp jmk = bilinear(current_spec(-k), table, s);
    MatchReport g = agree_on_exact(op_commutator(l0, jmk),
                                   op_scale(jmk, ParamScalar(Rat(k))));
    CHECK_MESSAGE(g.ok, g.detail);
  }
}

TEST_CASE("vacuum expansion reproduces the shifted double series") {
  // Even at lattice site 0 the kernel's half-integer levels leave their
  // mark: every Q^d picks up e^{beta d / 2}.
  TSeries z = z_double(3, 3);
  TSeries shifted = TSeries::zero(3);
  for (const auto& [m, c] : z.terms())
    shifted.set_coeff(m, c.map_q_exponent([](int d) {
      return ParamScalar::exp_beta(rat(d, 2), 3);
    }));
  CHECK(tau_expand(3, 0, 3) == shifted);
}

TEST_CASE("current exponential expands into schur coefficients") {
  for (long s : {0L, 2L}) {
    auto coeffs = current_exp_coeffs(s, 3);
    for (int d = 0; d <= 3; ++d)
      for (const Partition& lam : partitions_of(d)) {
        REQUIRE(coeffs.count(lam) == 1);
        CHECK(coeffs.at(lam) == schur(lam, 3));
      }
  }
}

TEST_CASE("invariant suite at reduced bounds") {
  VerifyOptions opts;
  opts.d_max_fock = 4;
  opts.charge_lo = -1;
  opts.charge_hi = 1;
  opts.n_beta = 3;
  opts.D_series = 3;
  CHECK(verify_fock(opts).all_ok());
}
