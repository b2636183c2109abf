#include "htoda/free_energy.hpp"

#include <stdexcept>

#include "htoda/partition.hpp"
#include "htoda/schur.hpp"

namespace htoda {

namespace {

// beta^j -> beta^{j+1}/(j+1) termwise; orders at or above n_beta drop.
TSeries integrate_beta(const TSeries& f, int n_beta) {
  TSeries out = TSeries::zero(f.trunc_degree());
  for (const auto& [mono, c] : f.terms()) {
    ParamScalar acc = ParamScalar::zero();
    for (const auto& [e, v] : c.terms()) {
      ParamExp e2 = e;
      e2.b += 1;
      if (e2.b >= n_beta) continue;
      acc += ParamScalar::monomial(v / Rat(e2.b), e2, n_beta);
    }
    if (!acc.is_zero()) out.set_coeff(mono, acc);
  }
  return out;
}

TSeries seed_f0(int D, int n_beta) {
  TSeries f = TSeries::zero(D);
  for (int k = 1; 2 * k <= D; ++k) {
    ParamScalar c =
        ParamScalar::monomial(rat(-k), ParamExp{0, 0, k, 0}, n_beta);
    f += (TSeries::var_t(D, k) * TSeries::var_tb(D, k)).mul_scalar(c);
  }
  return f;
}

}  // namespace

TSeries tower_rhs(const FreeEnergyTower& tower, int n) {
  int D = tower.D;
  TSeries rhs = TSeries::zero(D);

  std::vector<std::vector<TSeries>> d1(n + 1);
  for (int m = 0; m <= n; ++m) {
    d1[m].push_back(TSeries::zero(D));
    for (int k = 1; k <= D; ++k) d1[m].push_back(tower.F[m].derive_t(k));
  }

  for (int k = 1; k < D; ++k) {
    for (int l = 1; k + l <= D; ++l) {
      Rat half_kl = rat(static_cast<long>(k) * l, 2);
      rhs += (TSeries::var_t(D, k) * TSeries::var_t(D, l) * d1[n][k + l])
                 .mul_rat(half_kl);

      Rat half_sum = rat(k + l, 2);
      TSeries quad = TSeries::zero(D);
      if (n >= 1) quad += tower.F[n - 1].derive_t(k).derive_t(l);
      for (int m = 0; m <= n; ++m) quad += d1[m][k] * d1[n - m][l];
      rhs += (TSeries::var_t(D, k + l) * quad).mul_rat(half_sum);
    }
  }
  return rhs;
}

TSeries tower_residual(const FreeEnergyTower& tower, int n) {
  TSeries expect = integrate_beta(tower_rhs(tower, n), tower.n_beta);
  if (n == 0) expect += seed_f0(tower.D, tower.n_beta);
  return tower.F.at(n) - expect;
}

FreeEnergyTower solve_tower(int n_max, int D, int n_beta) {
  if (n_max < 0 || D < 1 || n_beta < 1)
    throw std::invalid_argument("solve_tower needs n_max >= 0, D, n_beta >= 1");
  FreeEnergyTower tower;
  tower.n_max = n_max;
  tower.D = D;
  tower.n_beta = n_beta;
  tower.F.assign(n_max + 1, TSeries::zero(D));
  tower.F[0] = seed_f0(D, n_beta);

  // Each sweep extends validity by one order of beta: the right-hand side
  // only needs the tower through the order being integrated from.
  for (int round = 1; round < n_beta; ++round) {
    std::vector<TSeries> next(n_max + 1, TSeries::zero(D));
    for (int n = 0; n <= n_max; ++n) {
      next[n] = integrate_beta(tower_rhs(tower, n), n_beta);
      if (n == 0) next[n] += tower.F[0].drop_beta_at_or_above(1);
    }
    tower.F = next;
  }
  return tower;
}

namespace {

using HMap = std::map<int, TSeries>;

void hmap_add(HMap& acc, int e, const TSeries& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

HMap hmap_mul(const HMap& a, const HMap& b) {
  HMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) hmap_add(out, ea + eb, ca * cb);
  return out;
}

HMap clip_window(const HMap& m, int lo, int hi) {
  HMap out;
  for (const auto& [e, c] : m)
    if (e >= lo && e <= hi) out.emplace(e, c);
  return out;
}

// Split a series by the number of variable factors in each monomial, so a
// term with j transpositions and a monomial of v parts can land at
// exponent j - v (minus any fixed offset for an implicit profile).
std::map<int, TSeries> split_by_var_count(const TSeries& f) {
  std::map<int, TSeries> out;
  for (const auto& [m, c] : f.terms()) {
    auto it = out.find(m.var_count());
    if (it == out.end())
      it = out.emplace(m.var_count(), TSeries::zero(f.trunc_degree())).first;
    it->second.set_coeff(m, c);
  }
  return out;
}

// Z with the constant 1 removed; exponents are left unclipped here because
// partial products may pass above the final window before recombining.
HMap hbar_sum_tail(int D, int n_beta) {
  HMap tail;
  for (int d = 1; 2 * d <= D; ++d) {
    for (const Partition& lam : partitions_of(d)) {
      TSeries prod = schur(lam, D) * schur_neg(lam, D, /*barred=*/true);
      if (prod.is_zero()) continue;
      std::map<int, TSeries> buckets = split_by_var_count(prod);
      Rat base = rat(kappa(lam), 2);
      Rat pw = 1;
      Rat fact = 1;
      for (int j = 0; j < n_beta; ++j) {
        if (j > 0) {
          pw *= base;
          fact *= Rat(j);
        }
        Rat value = pw / fact;
        if (value == 0) continue;
        ParamScalar c =
            ParamScalar::monomial(value, ParamExp{j, 0, d, 0}, n_beta);
        for (const auto& [vc, piece] : buckets)
          hmap_add(tail, j - vc, piece.mul_scalar(c));
      }
    }
  }
  return tail;
}

HMap hbar_log(const HMap& x, int D) {
  // Every term of x has positive weighted degree, so log(1 + x) terminates;
  // the cap m <= D + 1 is a guard, the power drops to zero first.
  HMap result;
  HMap power = x;
  int sign = 1;
  for (int m = 1; m <= D + 1 && !power.empty(); ++m) {
    for (const auto& [e, c] : power)
      hmap_add(result, e, c.mul_rat(Rat(sign) / Rat(m)));
    power = hmap_mul(power, x);
    sign = -sign;
  }
  return result;
}

}  // namespace

std::map<int, TSeries> oracle_hbar_expansion(int D, int n_beta, int hi) {
  HMap z = hbar_sum_tail(D, n_beta);
  hmap_add(z, 0, TSeries::one(D));
  return clip_window(z, -2 * D, hi);
}

std::map<int, TSeries> oracle_log_hbar(int D, int n_beta, int hi) {
  return clip_window(hbar_log(hbar_sum_tail(D, n_beta), D), -2 * D, hi);
}

TSeries oracle_genus(int D, int n_beta, int n) {
  HMap lg = oracle_log_hbar(D, n_beta, 2 * n);
  auto it = lg.find(2 * n - 2);
  return it == lg.end() ? TSeries::zero(D) : it->second;
}

FullFreeEnergy assemble_full_free_energy(const FreeEnergyTower& tower) {
  FullFreeEnergy out;
  int nb = tower.n_beta;
  out.logq_coeff = ParamScalar::monomial(rat(1, 2), ParamExp{0, 2, 0, 0}, nb);
  TSeries cubic = TSeries::constant(
      tower.D, ParamScalar::monomial(rat(1, 6), ParamExp{1, 3, 0, 0}, nb));
  out.series = cubic + tower.F.at(0).q_to_b();
  return out;
}

std::vector<TSeries> simple_specialization(const FreeEnergyTower& tower) {
  std::map<int, AffineSub> tb_sub;
  tb_sub[1] = AffineSub{-ParamScalar::one(), ParamScalar::zero()};
  for (int k = 2; k <= tower.D; ++k)
    tb_sub[k] = AffineSub{ParamScalar::zero(), ParamScalar::zero()};
  std::vector<TSeries> out;
  out.reserve(tower.F.size());
  for (const TSeries& f : tower.F) out.push_back(substitute(f, {}, tb_sub));
  return out;
}

std::map<int, TSeries> simple_oracle_log_hbar(int D, int n_beta, int hi) {
  HMap tail;
  for (int d = 1; d <= D; ++d) {
    for (const Partition& lam : partitions_of(d)) {
      TSeries part = schur(lam, D).mul_rat(schur_principal(lam));
      if (part.is_zero()) continue;
      // The principal leg fixes a profile with d unit parts, so it always
      // contributes d to the count of variable factors.
      std::map<int, TSeries> buckets = split_by_var_count(part);
      Rat base = rat(kappa(lam), 2);
      Rat pw = 1;
      Rat fact = 1;
      for (int j = 0; j < n_beta; ++j) {
        if (j > 0) {
          pw *= base;
          fact *= Rat(j);
        }
        Rat value = pw / fact;
        if (value == 0) continue;
        ParamScalar c =
            ParamScalar::monomial(value, ParamExp{j, 0, d, 0}, n_beta);
        for (const auto& [vc, piece] : buckets)
          hmap_add(tail, j - d - vc, piece.mul_scalar(c));
      }
    }
  }
  return clip_window(hbar_log(tail, D), -2 * D, hi);
}

}  // namespace htoda
