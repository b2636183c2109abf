#include "htoda/string_equations.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace htoda {

namespace {

constexpr int kPoly = 0;  // coefficients stay polynomial in beta

// Every p-Laurent series here lives above this floor.  Exponents below
// -(D+2) only carry coefficients of weighted degree above D, so nothing a
// derivative or an inverse can shift back into range is ever lost.
int flo(int D) { return -(D + 2); }

ParamScalar beta_mono() {
  return ParamScalar::monomial(1, ParamExp{1, 0, 0, 0}, kPoly);
}
ParamScalar s_mono() {
  return ParamScalar::monomial(1, ParamExp{0, 1, 0, 0}, kPoly);
}
ParamScalar b_mono() {
  return ParamScalar::monomial(1, ParamExp{0, 0, 0, 1}, kPoly);
}
ParamScalar q_mono(int e) {
  return ParamScalar::monomial(1, ParamExp{0, 0, e, 0}, kPoly);
}

TSeries truncate_wdeg(const TSeries& f, int g) {
  TSeries out = TSeries::zero(f.trunc_degree());
  for (const auto& [m, c] : f.terms())
    if (m.wdeg() <= g) out.set_coeff(m, c);
  return out;
}

PLaurent truncate_wdeg(const PLaurent& f, int g) {
  PLaurent out(f.trunc_degree(), f.floor());
  for (const auto& [n, c] : f.coeffs()) {
    TSeries t = truncate_wdeg(c, g);
    if (!t.is_zero()) out.set_coeff(n, t);
  }
  return out;
}

TSeries retrunc(const TSeries& f, int new_d) {
  TSeries out = TSeries::zero(new_d);
  for (const auto& [m, c] : f.terms())
    if (m.wdeg() <= new_d) out.set_coeff(m, c);
  return out;
}

int min_wdeg(const PLaurent& f) {
  int best = INT_MAX;
  for (const auto& [n, c] : f.coeffs())
    for (const auto& [m, v] : c.terms()) best = std::min(best, m.wdeg());
  return best;
}

// p^n coefficients of exp(sum alpha_n p^{-n}) and its barred partner.
PLaurent assemble_l(int D, const std::map<int, TSeries>& alpha) {
  PLaurent arg(D, flo(D));
  for (const auto& [n, c] : alpha)
    if (!c.is_zero()) arg.set_coeff(-n, c);
  return exp_laurent(arg).mul_p_power(1);
}

PLaurent assemble_lbar_inv(int D, const TSeries& ubar0,
                           const std::map<int, TSeries>& alphabar) {
  PLaurent arg(D, flo(D));
  for (const auto& [n, c] : alphabar)
    if (!c.is_zero()) arg.set_coeff(n, c);
  return exp_laurent(arg).mul_series(ubar0).mul_p_power(-1);
}

std::vector<PLaurent> powers(const PLaurent& base, int top) {
  std::vector<PLaurent> out;
  out.push_back(PLaurent::constant(base.trunc_degree(), base.floor(),
                                   ParamScalar::one()));
  for (int k = 1; k <= top; ++k) out.push_back(out.back() * base);
  return out;
}

// Fills u, ubar, v, vbar from (alpha, alphabar, ubar0); shared by both
// solvers so the routes differ exactly where the mathematics does.
void finish_solution(StringSolution& sol) {
  int D = sol.D;
  PLaurent l = assemble_l(D, sol.alpha);
  PLaurent lbar_inv = assemble_lbar_inv(D, sol.ubar0, sol.alphabar);
  for (int n = 1; n <= D; ++n) {
    sol.u[n] = l.coeff(1 - n);
    sol.ubar[n] = lbar_inv.coeff(n - 1);
  }

  LaurentUnit lu = decompose_unit(l);
  PLaurent dlog_l = l.derive_p() * lu.inverse;
  LaurentUnit lbu = decompose_unit(lbar_inv);
  PLaurent dlog_lbar = -(lbar_inv.derive_p() * lbu.inverse);

  // Both exponentials of the string equations share the argument
  // phi = log(L Lbar^{-1} / B).  Re-expanding phi in powers of L gives the
  // v_n as the L^{-n} coefficients, and in powers of Lbar the vbar_n as the
  // Lbar^{n} coefficients; the L^0 coefficient cancels by the resummation
  // identity, so no constant term is skipped here.
  PLaurent phi =
      decompose_unit((l * lbar_inv).mul_scalar(b_mono().inverse()))
          .log_series;

  std::vector<PLaurent> lp = powers(l, D);
  std::vector<PLaurent> lbp = powers(lbar_inv, D);
  for (int n = 1; n <= D; ++n) {
    sol.v[n] = (phi * lp[n] * dlog_l).residue().div_beta();
    sol.vbar[n] = (phi * lbp[n] * dlog_lbar).residue().div_beta();
  }
}

void push(CheckReport& rep, const std::string& name, bool ok,
          const std::string& detail) {
  rep.lines.push_back({name, ok, detail});
}

void push_residual(CheckReport& rep, const std::string& name,
                   const PLaurent& residual, int D) {
  if (residual.is_zero()) {
    push(rep, name, true,
         "identically zero through degree " + std::to_string(D));
    return;
  }
  push(rep, name, false,
       "first nonzero at degree " + std::to_string(min_wdeg(residual)));
}

PLaurent euler_p(const PLaurent& f) {
  PLaurent out(f.trunc_degree(), f.floor());
  for (const auto& [n, c] : f.coeffs())
    if (n != 0) out.set_coeff(n, c.mul_rat(Rat(n)));
  return out;
}

}  // namespace

PLaurent build_L(const StringSolution& sol) {
  int D = sol.D;
  PLaurent l = PLaurent::p_power(D, flo(D), 1);
  for (const auto& [n, c] : sol.u)
    if (!c.is_zero()) l.set_coeff(1 - n, c);
  return l;
}

PLaurent build_Lbar_inv(const StringSolution& sol) {
  int D = sol.D;
  PLaurent lb(D, flo(D));
  if (!sol.ubar0.is_zero()) lb.set_coeff(-1, sol.ubar0);
  for (const auto& [n, c] : sol.ubar)
    if (!c.is_zero()) lb.set_coeff(n - 1, c);
  return lb;
}

PLaurent build_M(const StringSolution& sol) {
  int D = sol.D;
  PLaurent l = build_L(sol);
  PLaurent m = PLaurent::constant(D, flo(D), s_mono());
  std::vector<PLaurent> lp = powers(l, D);
  PLaurent linv = invert(l);
  PLaurent linv_n = PLaurent::constant(D, flo(D), ParamScalar::one());
  for (int n = 1; n <= D; ++n) {
    m += lp[n].mul_series(TSeries::var_t(D, n).mul_rat(n));
    linv_n *= linv;
    auto it = sol.v.find(n);
    if (it != sol.v.end() && !it->second.is_zero())
      m += linv_n.mul_series(it->second);
  }
  return m;
}

PLaurent build_Mbar(const StringSolution& sol) {
  int D = sol.D;
  PLaurent lbar_inv = build_Lbar_inv(sol);
  PLaurent lbar = invert(lbar_inv);
  PLaurent m = PLaurent::constant(D, flo(D), s_mono());
  std::vector<PLaurent> lbp = powers(lbar_inv, D);
  PLaurent lbar_n = PLaurent::constant(D, flo(D), ParamScalar::one());
  for (int n = 1; n <= D; ++n) {
    if (n <= sol.tbar_max)
      m -= lbp[n].mul_series(TSeries::var_tb(D, n).mul_rat(n));
    lbar_n *= lbar;
    auto it = sol.vbar.find(n);
    if (it != sol.vbar.end() && !it->second.is_zero())
      m += lbar_n.mul_series(it->second);
  }
  return m;
}

StringSolution solve(int D) {
  if (D < 1) throw std::invalid_argument("solve needs D >= 1");
  StringSolution sol;
  sol.D = D;
  sol.tbar_max = D;
  TSeries bconst = TSeries::constant(D, b_mono());
  sol.ubar0 = bconst;
  for (int n = 1; n <= D; ++n) {
    sol.alpha[n] = TSeries::zero(D);
    sol.alphabar[n] = TSeries::zero(D);
  }

  for (int g = 1; g <= D; ++g) {
    // Data of weighted degree < g determines degree g: the explicit time
    // factor in each sum raises the degree by at least one.
    PLaurent lbar_inv = assemble_lbar_inv(D, sol.ubar0, sol.alphabar);
    PLaurent l = assemble_l(D, sol.alpha);
    std::vector<PLaurent> lbp = powers(lbar_inv, D);
    std::vector<PLaurent> lp = powers(l, D);
    for (int n = 1; n <= D; ++n) {
      TSeries down = TSeries::zero(D);
      TSeries up = TSeries::zero(D);
      for (int k = n; k <= D; ++k) {
        TSeries cdown = lbp[k].coeff(-n);
        if (!cdown.is_zero())
          down += (TSeries::var_tb(D, k) * cdown).mul_rat(k);
        TSeries cup = lp[k].coeff(n);
        if (!cup.is_zero()) up += (TSeries::var_t(D, k) * cup).mul_rat(k);
      }
      sol.alpha[n] = (-down).mul_scalar(beta_mono());
      sol.alphabar[n] = up.mul_scalar(beta_mono());
    }
    TSeries pairing = TSeries::zero(D);
    for (int k = 1; k <= D; ++k)
      pairing += (sol.alpha[k] * sol.alphabar[k]).mul_rat(k);
    sol.ubar0 = bconst * exp_series(pairing);
  }

  finish_solution(sol);
  return sol;
}

StringSolution solve_case_i(int D) {
  if (D < 1) throw std::invalid_argument("solve_case_i needs D >= 1");
  StringSolution sol;
  sol.D = D;
  sol.tbar_max = 1;
  TSeries bconst = TSeries::constant(D, b_mono());
  TSeries tb1 = TSeries::var_tb(D, 1);
  sol.ubar0 = bconst;

  // Scalar fixpoint: ubar0 = B exp(beta sum_k k t_k (-k beta tbar_1 ubar0)^k / k!).
  for (int g = 1; g <= D; ++g) {
    TSeries inner = TSeries::zero(D);
    for (int k = 1; k <= D; ++k) {
      TSeries base = (tb1 * sol.ubar0).mul_scalar(beta_mono()).mul_rat(-k);
      TSeries pw = TSeries::one(D);
      for (int j = 0; j < k; ++j) pw *= base;
      if (pw.is_zero()) continue;
      inner += (TSeries::var_t(D, k) * pw).mul_rat(Rat(k) / Rat(factorial(k)));
    }
    sol.ubar0 = bconst * exp_series(inner.mul_scalar(beta_mono()));
  }

  for (int n = 1; n <= D; ++n) {
    sol.alpha[n] = TSeries::zero(D);
    sol.alphabar[n] = TSeries::zero(D);
  }
  sol.alpha[1] = -(tb1 * sol.ubar0).mul_scalar(beta_mono());

  // alphabar_n via the closed power coefficients
  // (L^k)_n = (-k beta tbar_1 ubar0)^{k-n} / (k-n)!.
  for (int n = 1; n <= D; ++n) {
    TSeries acc = TSeries::zero(D);
    for (int k = n; k <= D; ++k) {
      TSeries base = (tb1 * sol.ubar0).mul_scalar(beta_mono()).mul_rat(-k);
      TSeries pw = TSeries::one(D);
      for (int j = 0; j < k - n; ++j) pw *= base;
      if (pw.is_zero()) continue;
      acc += (TSeries::var_t(D, k) * pw)
                 .mul_rat(Rat(k) / Rat(factorial(k - n)));
    }
    sol.alphabar[n] = acc.mul_scalar(beta_mono());
  }

  finish_solution(sol);
  return sol;
}

namespace {

StringSolution map_solution(const StringSolution& sol,
                            const std::map<int, AffineSub>& t_sub,
                            const std::map<int, AffineSub>& tb_sub) {
  StringSolution out;
  out.D = sol.D;
  out.tbar_max = sol.tbar_max;
  out.ubar0 = substitute(sol.ubar0, t_sub, tb_sub);
  auto map_all = [&](const std::map<int, TSeries>& src) {
    std::map<int, TSeries> dst;
    for (const auto& [n, c] : src) dst[n] = substitute(c, t_sub, tb_sub);
    return dst;
  };
  out.u = map_all(sol.u);
  out.ubar = map_all(sol.ubar);
  out.v = map_all(sol.v);
  out.vbar = map_all(sol.vbar);
  out.alpha = map_all(sol.alpha);
  out.alphabar = map_all(sol.alphabar);
  return out;
}

}  // namespace

StringSolution restrict_tbar(const StringSolution& sol, int keep) {
  std::map<int, AffineSub> tb_sub;
  for (int k = keep + 1; k <= sol.D; ++k)
    tb_sub[k] = AffineSub{ParamScalar::zero(), ParamScalar::zero()};
  StringSolution out = map_solution(sol, {}, tb_sub);
  out.tbar_max = keep;
  return out;
}

StringSolution at_t_zero(const StringSolution& sol) {
  std::map<int, AffineSub> t_sub;
  for (int k = 1; k <= sol.D; ++k)
    t_sub[k] = AffineSub{ParamScalar::zero(), ParamScalar::zero()};
  return map_solution(sol, t_sub, {});
}

CheckReport verify_string_equations(const StringSolution& sol) {
  CheckReport rep;
  int D = sol.D;
  PLaurent l = build_L(sol);
  PLaurent lbar_inv = build_Lbar_inv(sol);
  PLaurent lbar = invert(lbar_inv);
  PLaurent linv = invert(l);
  PLaurent m = build_M(sol);
  PLaurent mbar = build_Mbar(sol);
  PLaurent s_const = PLaurent::constant(D, flo(D), s_mono());
  ParamScalar beta = beta_mono();

  // Both equations, with Q e^{beta s} folded into B: the exponential keeps
  // only the s-free part of M (resp. Mbar), and Q e^{beta s} * remaining
  // factors enter through B.
  PLaurent exp_mbar = exp_laurent((mbar - s_const).mul_scalar(beta));
  PLaurent rhs1 = (lbar * exp_mbar).mul_scalar(b_mono());
  push_residual(rep, "string-equation-residual", l - rhs1, D);

  PLaurent exp_m = exp_laurent((m - s_const).mul_scalar(beta));
  PLaurent rhs2 = (linv * exp_m).mul_scalar(b_mono());
  push_residual(rep, "string-equation-residual-bar", lbar_inv - rhs2, D);

  push_residual(rep, "bracket-L-M", poisson(l, m) - l, D);
  push_residual(rep, "bracket-Lbar-Mbar", poisson(lbar, mbar) - lbar, D);

  // {log L, log Lbar^{-1}} with log p and log B handled symbolically.
  // With F = log p + S1 and G = -log p + log B + S2 the bracket expands to
  // beta + d_s S1 + d_s S2 + {S1, S2} + beta p d_p S1, and the target value
  // is the same beta, so the remainder must vanish.
  {
    LaurentUnit lu = decompose_unit(l);
    LaurentUnit lbu = decompose_unit(lbar_inv);
    const PLaurent& s1 = lu.log_series;
    const PLaurent& s2 = lbu.log_series;
    PLaurent remainder = s1.derive_s() + s2.derive_s() + poisson(s1, s2) +
                         euler_p(s1).mul_scalar(beta);
    push_residual(rep, "log-bracket-beta", remainder, D);
  }

  // k-th powers of the first equation.
  {
    std::vector<PLaurent> lp = powers(l, 3);
    std::vector<PLaurent> lbarp = powers(lbar, 3);
    for (int k = 2; k <= 3; ++k) {
      PLaurent ek =
          exp_laurent((mbar - s_const).mul_scalar(beta.mul_rat(Rat(k))));
      PLaurent rhs = (lbarp[k] * ek).mul_scalar(b_mono().pow(k));
      push_residual(rep, "power-identity-" + std::to_string(k),
                    lp[k] - rhs, D);
    }
  }

  // Resummation: beta sum_k k t_k (L^k)_0 = sum_n n alpha_n alphabar_n
  //            = -beta sum_k k tbar_k (Lbar^{-k})_0.
  {
    std::vector<PLaurent> lp = powers(l, D);
    std::vector<PLaurent> lbp = powers(lbar_inv, D);
    TSeries sum_t = TSeries::zero(D);
    TSeries sum_tb = TSeries::zero(D);
    for (int k = 1; k <= D; ++k) {
      sum_t += (TSeries::var_t(D, k) * lp[k].coeff(0)).mul_rat(k);
      if (k <= sol.tbar_max)
        sum_tb += (TSeries::var_tb(D, k) * lbp[k].coeff(0)).mul_rat(k);
    }
    TSeries pairing = TSeries::zero(D);
    for (int n = 1; n <= D; ++n) {
      auto ia = sol.alpha.find(n);
      auto ib = sol.alphabar.find(n);
      if (ia != sol.alpha.end() && ib != sol.alphabar.end())
        pairing += (ia->second * ib->second).mul_rat(n);
    }
    bool ok1 = sum_t.mul_scalar(beta) == pairing;
    push(rep, "resummation-unbarred", ok1,
         ok1 ? "matches the alpha-pairing" : "differs from the alpha-pairing");
    bool ok2 = sum_tb.mul_scalar(beta) == -pairing;
    push(rep, "resummation-barred", ok2,
         ok2 ? "matches the alpha-pairing" : "differs from the alpha-pairing");
  }

  // First order in beta: every correction beyond these is a product of two
  // order-beta coefficients, so ubar0 = B + O(beta^2) while
  // u_n = -beta n tbar_n B^n + O(beta^2) and ubar_n = beta n t_n B +
  // O(beta^2) (the barred times cap at tbar_max).
  {
    bool ok =
        sol.ubar0.drop_beta_at_or_above(1) == TSeries::constant(D, b_mono());
    for (int n = 1; n <= D && ok; ++n) {
      TSeries lead_u =
          (n <= sol.tbar_max)
              ? TSeries::var_tb(D, n).mul_scalar(b_mono().pow(n)).mul_scalar(
                    beta.mul_rat(-n))
              : TSeries::zero(D);
      ok = ok && sol.u.at(n).drop_beta_at_or_above(2) == lead_u;
      TSeries lead_ub =
          TSeries::var_t(D, n).mul_scalar(b_mono()).mul_scalar(
              beta.mul_rat(n));
      ok = ok && sol.ubar.at(n).drop_beta_at_or_above(2) == lead_ub;
    }
    push(rep, "leading-terms", ok,
         ok ? "ubar0, u_n, ubar_n start as expected through order beta"
            : "leading coefficients differ");
  }

  // Homogeneity: t_n -> c^{-n} t_n, tbar_n -> c^n tbar_n multiplies each
  // coefficient family by a fixed power of c.  The solution is free of bare
  // Q, so Q itself serves as the fresh scale.
  {
    bool qfree = true;
    auto check_qfree = [&](const TSeries& f) {
      for (const auto& [mono, c] : f.terms())
        if (c.has_q()) qfree = false;
    };
    check_qfree(sol.ubar0);
    for (const auto& fam : {&sol.u, &sol.ubar, &sol.v, &sol.vbar, &sol.alpha,
                            &sol.alphabar})
      for (const auto& [n, c] : *fam) check_qfree(c);
    push(rep, "q-free-coefficients", qfree,
         qfree ? "no bare Q in any coefficient"
               : "found bare Q; B bookkeeping broken");

    if (qfree) {
      std::map<int, AffineSub> t_sub, tb_sub;
      for (int k = 1; k <= D; ++k) {
        t_sub[k] = AffineSub{ParamScalar::zero(), q_mono(-k)};
        tb_sub[k] = AffineSub{ParamScalar::zero(), q_mono(k)};
      }
      auto scaled = [&](const TSeries& f, int w) {
        return substitute(f, t_sub, tb_sub) == f.mul_scalar(q_mono(w));
      };
      bool ok = scaled(sol.ubar0, 0);
      for (int n = 1; n <= D && ok; ++n) {
        ok = ok && scaled(sol.u.at(n), n) && scaled(sol.ubar.at(n), -n) &&
             scaled(sol.v.at(n), n) && scaled(sol.vbar.at(n), -n) &&
             scaled(sol.alpha.at(n), n) && scaled(sol.alphabar.at(n), -n);
      }
      push(rep, "scaling-homogeneity", ok,
           ok ? "coefficients carry the expected scale weights"
              : "a coefficient breaks the scale weight");
    }
  }

  // Lax flow in t_1: dL/dt_1 = {(L)_{>=0}, L}, exact through degree D-1.
  {
    PLaurent lhs = truncate_wdeg(l.derive_t(1), D - 1);
    PLaurent rhs = truncate_wdeg(poisson(l.project_nonneg(), l), D - 1);
    push_residual(rep, "lax-flow-t1", lhs - rhs, D - 1);
  }

  return rep;
}

CheckReport lambert_form(const StringSolution& sol) {
  CheckReport rep;
  int D = sol.D;
  bool u0_is_b = sol.ubar0 == TSeries::constant(D, b_mono());
  push(rep, "u0-at-t-zero", u0_is_b,
       u0_is_b ? "ubar0 = B = Q e^{beta s}" : "ubar0 differs from B");

  TSeries c = (TSeries::var_tb(D, 1) * sol.ubar0).mul_scalar(beta_mono());
  PLaurent x = invert(build_L(sol)).mul_series(c);
  PLaurent y = PLaurent::p_power(D, flo(D), -1).mul_series(c);
  PLaurent rhs = y * exp_laurent(y);
  bool ok = x == rhs;
  push(rep, "lambert-curve", ok,
       ok ? "x = y e^y exact through p^-" + std::to_string(D)
          : "x differs from y e^y");
  return rep;
}

CheckLine compare_v_with_free_energy(const StringSolution& sol, int n,
                                     const TSeries& f0) {
  int cmp_deg = std::min(sol.D, f0.trunc_degree() - n);
  int nb = 0;
  for (const auto& [mono, c] : f0.terms())
    nb = std::max(nb, c.mode_code());

  TSeries lhs = retrunc(sol.v.at(n), cmp_deg);
  if (nb >= 1) lhs = lhs.drop_beta_at_or_above(nb);
  lhs = truncate_wdeg(lhs, cmp_deg);
  TSeries rhs = retrunc(f0.derive_t(n).q_to_b(), cmp_deg);
  rhs = truncate_wdeg(rhs, cmp_deg);

  bool equal = lhs == rhs;
  std::ostringstream os;
  os << "v_" << n << (equal ? " equals " : " differs from ")
     << "dF0/dt_" << n << " through degree " << cmp_deg
     << " (informational)";
  return {"v-vs-free-energy-" + std::to_string(n), equal, os.str()};
}

}  // namespace htoda
