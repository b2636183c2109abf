#pragma once

#include <map>

#include "htoda/tseries.hpp"

namespace htoda {

// Laurent series in p with TSeries coefficients. The top degree is tracked
// exactly; exponents below the configured floor are dropped (soundness rests
// on the weighted-degree bound: discarded tails only carry coefficients the
// t-truncation kills anyway). All entries share one truncation degree D;
// binary operations take the coarser (larger) floor of the two operands.
class PLaurent {
 public:
  PLaurent() : trunc_(0), floor_(0) {}
  PLaurent(int trunc_degree, int floor);

  static PLaurent monomial(int D, int floor, int n, const TSeries& c);
  static PLaurent p_power(int D, int floor, int n);  // p^n
  static PLaurent constant(int D, int floor, const ParamScalar& c);

  int trunc_degree() const { return trunc_; }
  int floor() const { return floor_; }
  bool is_zero() const { return coeffs_.empty(); }
  int lo() const;  // smallest stored exponent (floor when empty)
  int hi() const;  // largest stored exponent (floor-1 when empty)

  // Coefficient of p^n. Above the stored top this is exactly zero;
  // below the floor it is unknown and therefore an error.
  TSeries coeff(int n) const;
  TSeries residue() const { return coeff(-1); }

  void set_coeff(int n, const TSeries& c);

  PLaurent operator+(const PLaurent& o) const;
  PLaurent operator-(const PLaurent& o) const;
  PLaurent operator*(const PLaurent& o) const;
  PLaurent operator-() const;
  PLaurent& operator+=(const PLaurent& o) { return *this = *this + o; }
  PLaurent& operator-=(const PLaurent& o) { return *this = *this - o; }
  PLaurent& operator*=(const PLaurent& o) { return *this = *this * o; }

  PLaurent mul_scalar(const ParamScalar& c) const;
  PLaurent mul_series(const TSeries& c) const;
  PLaurent mul_p_power(int k) const;  // shift exponents by k
  PLaurent pow(int e) const;          // e >= 0

  PLaurent derive_p() const;
  PLaurent derive_s() const;
  PLaurent derive_t(int k) const;
  PLaurent derive_tb(int k) const;

  PLaurent project_nonneg() const;  // p-degrees >= 0
  PLaurent project_neg() const;     // p-degrees < 0

  bool operator==(const PLaurent& o) const;

  std::string str() const;

  const std::map<int, TSeries>& coeffs() const { return coeffs_; }

 private:
  int trunc_;
  int floor_;
  std::map<int, TSeries> coeffs_;

  void prune();
  friend PLaurent exp_laurent(const PLaurent&);
  friend struct LaurentUnit;
};

// exp of a nilpotent argument: every term must carry positive weighted
// degree, or be beta-positive under a truncated beta-mode.
PLaurent exp_laurent(const PLaurent& f);

// Decomposition f = c * p^k * (1 + x) with c an invertible parameter
// monomial and x nilpotent. Exposes the inverse and the logarithm series.
struct LaurentUnit {
  ParamScalar lead;     // c
  int lead_exp;         // k
  PLaurent log_series;  // log(1 + x)
  PLaurent inverse;     // c^{-1} p^{-k} (1 + x)^{-1}
};
LaurentUnit decompose_unit(const PLaurent& f);

inline PLaurent invert(const PLaurent& f) { return decompose_unit(f).inverse; }

// Poisson bracket {F, G} = p (dF/dp dG/ds - dF/ds dG/dp).
PLaurent poisson(const PLaurent& F, const PLaurent& G);

}  // namespace htoda
