#pragma once

#include <map>
#include <string>
#include <vector>

#include "htoda/param_scalar.hpp"

namespace htoda {

// Monomial in the variables t_1, t_2, ... and tbar_1, tbar_2, ...
// Stored sparsely as (variable index, exponent) pairs sorted by index.
// The weighted degree gives t_k and tbar_k both weight k.
struct Monomial {
  std::vector<std::pair<int, int>> t;
  std::vector<std::pair<int, int>> tb;

  int wdeg() const;
  int var_count() const;  // total number of variable factors (sum of exponents)
  int exp_t(int k) const;
  int exp_tb(int k) const;
  Monomial mul(const Monomial& o) const;
  std::string str() const;
  bool operator==(const Monomial&) const = default;
};

// Graded order: by weighted degree, then lexicographically on the dense
// t-exponent vector (t_1, t_2, ...), then on the tbar vector; within a
// degree, the larger exponent on the earlier variable sorts first. This is
// also the documented serialization order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Power series in t/tbar truncated at weighted degree D, with ParamScalar
// coefficients. All binary operations require equal D.
class TSeries {
 public:
  TSeries() : trunc_(0) {}
  explicit TSeries(int trunc_degree);

  static TSeries zero(int D) { return TSeries(D); }
  static TSeries constant(int D, const ParamScalar& c);
  static TSeries one(int D) { return constant(D, ParamScalar::one()); }
  static TSeries var_t(int D, int k, const ParamScalar& coeff = ParamScalar::one());
  static TSeries var_tb(int D, int k, const ParamScalar& coeff = ParamScalar::one());

  int trunc_degree() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, ParamScalar, MonomialOrder>& terms() const {
    return terms_;
  }

  ParamScalar coeff(const Monomial& m) const;
  ParamScalar constant_term() const { return coeff(Monomial{}); }

  TSeries operator+(const TSeries& o) const;
  TSeries operator-(const TSeries& o) const;
  TSeries operator*(const TSeries& o) const;
  TSeries operator-() const;
  TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
  TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
  TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

  TSeries mul_scalar(const ParamScalar& c) const;
  TSeries mul_rat(const Rat& c) const;
  TSeries div_rat(const Rat& c) const { return mul_rat(Rat(1) / c); }

  TSeries derive_t(int k) const;
  TSeries derive_tb(int k) const;
  TSeries derive_s() const;      // coefficient-wise d/ds
  TSeries div_beta() const;      // coefficient-wise checked division
  TSeries negate_beta() const;   // beta -> -beta
  TSeries q_to_b() const;
  // Drop all terms whose coefficient carries beta-degree >= k.
  TSeries drop_beta_at_or_above(int k) const;

  // Exchange t_k <-> tbar_k in every monomial.
  TSeries swap_vars() const;

  bool has_q() const;

  // Equality demands matching truncation degree (mismatch is a logic error).
  bool operator==(const TSeries& o) const;

  std::string str() const;

  void set_coeff(const Monomial& m, const ParamScalar& c);  // drops zero

 private:
  int trunc_;
  std::map<Monomial, ParamScalar, MonomialOrder> terms_;

  void check_compatible(const TSeries& o) const;
};

// exp of a nilpotent series: the constant term must vanish, or consist
// purely of beta-positive terms under a truncated beta-mode.
TSeries exp_series(const TSeries& f);

// f = lead * (1 + x) with invertible monomial lead and nilpotent x;
// returns lead and log(1 + x).
struct LogUnit {
  ParamScalar lead;
  TSeries series;
};
LogUnit log_unit(const TSeries& f);

// Per-variable affine substitution: var -> a + b * var.
struct AffineSub {
  ParamScalar a;
  ParamScalar b;
};
TSeries substitute(const TSeries& f, const std::map<int, AffineSub>& t_sub,
                   const std::map<int, AffineSub>& tb_sub);

}  // namespace htoda
