#pragma once

#include <compare>
#include <map>
#include <string>

#include "htoda/rational.hpp"

namespace htoda {

// Exponent tuple of one parameter monomial: beta^b s^es Q^eq B^eB.
// beta and s are polynomial generators (b, es >= 0); Q and B are Laurent
// (any integer exponent). B abbreviates Q e^{beta s}, carried as an
// independent generator whose s-derivative is beta B.
struct ParamExp {
  int b = 0;
  int es = 0;
  int eq = 0;
  int eB = 0;
  auto operator<=>(const ParamExp&) const = default;
};

// beta-mode of a scalar: how powers of beta are treated in arithmetic.
//   any:   no beta content committed yet (constants); unifies with either.
//   poly:  exact polynomial in beta, nothing dropped.
//   trunc: power series in beta truncated at order N (terms with b >= N drop).
// Combining poly with trunc, or two different truncation orders, is an error.
enum class BetaMode : int { any = -1, poly = 0 };
// trunc(N) is encoded as mode value N >= 1.

class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(const Rat& c);  // constant, mode any
  ParamScalar(long c) : ParamScalar(Rat(c)) {}

  static ParamScalar zero() { return {}; }
  static ParamScalar one() { return ParamScalar(Rat(1)); }
  // Single monomial c * beta^b s^es Q^eq B^eB in the given mode
  // (mode_code: -1 any, 0 poly, N>=1 truncation order).
  static ParamScalar monomial(const Rat& c, ParamExp e, int mode_code = -1);
  // exp(c beta) expanded to the truncation order (requires nbeta >= 1).
  static ParamScalar exp_beta(const Rat& c, int nbeta);

  int mode_code() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;     // no generator content
  Rat constant_part() const;    // coefficient of the trivial exponent
  const std::map<ParamExp, Rat>& terms() const { return terms_; }

  ParamScalar operator+(const ParamScalar& o) const;
  ParamScalar operator-(const ParamScalar& o) const;
  ParamScalar operator*(const ParamScalar& o) const;
  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

  ParamScalar mul_rat(const Rat& c) const;
  ParamScalar div_rat(const Rat& c) const;
  // Multiply by beta^b s^es Q^eq B^eB (b, es >= 0).
  ParamScalar shift(int b, int es, int eq, int eB) const;
  // Small non-negative integer power.
  ParamScalar pow(int e) const;

  // Inverse of an invertible monomial: single term, b == 0, es == 0.
  ParamScalar inverse() const;
  bool is_invertible_monomial() const;

  // d/ds: acts on s-powers and, via dB/ds = beta B, on B-powers.
  ParamScalar derive_s() const;
  // Exact division by beta; throws if any term lacks a beta factor.
  ParamScalar div_beta() const;
  // beta -> -beta (negates odd beta-degree terms).
  ParamScalar negate_beta() const;
  // Every Q^e replaced by B^e (used when folding Q e^{beta s} into B).
  ParamScalar q_to_b() const;
  // Every term Q^e multiplied by factor(e); factor must be mode-compatible.
  template <class F>
  ParamScalar map_q_exponent(F&& factor) const {
    ParamScalar out;
    out.mode_ = mode_;
    for (const auto& [e, c] : terms_) {
      ParamScalar f = factor(e.eq);
      ParamScalar t = ParamScalar::monomial(c, e, mode_) * f;
      out = out + t;
    }
    return out;
  }

  bool has_q() const;          // any term with eq != 0
  int max_beta_degree() const; // -1 when zero

  // Value equality on normalized terms; the beta-mode tag is configuration,
  // not value, so it does not participate.
  bool operator==(const ParamScalar& o) const { return terms_ == o.terms_; }

  std::string str() const;  // diagnostics

  // Re-truncates under a given mode code and adopts it.
  ParamScalar with_mode(int mode_code) const;

 private:
  void normalize();
  static int unify(int a, int b);

  int mode_ = static_cast<int>(BetaMode::any);
  std::map<ParamExp, Rat> terms_;

  friend class TSeries;
};

}  // namespace htoda
