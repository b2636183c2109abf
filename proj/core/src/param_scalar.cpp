#include "htoda/param_scalar.hpp"

#include <sstream>

namespace htoda {

ParamScalar::ParamScalar(const Rat& c) {
  if (c != 0) {
    Rat cc = c;
    cc.canonicalize();
    terms_[ParamExp{}] = cc;
  }
}

ParamScalar ParamScalar::monomial(const Rat& c, ParamExp e, int mode_code) {
  if (e.b < 0 || e.es < 0)
    throw std::invalid_argument("beta and s exponents must be non-negative");
  ParamScalar p;
  p.mode_ = mode_code;
  if (c != 0) {
    Rat cc = c;
    cc.canonicalize();
    p.terms_[e] = cc;
  }
  p.normalize();
  return p;
}

ParamScalar ParamScalar::exp_beta(const Rat& c, int nbeta) {
  if (nbeta < 1)
    throw std::invalid_argument("exp_beta needs a truncation order >= 1");
  ParamScalar out;
  out.mode_ = nbeta;
  Rat coef = 1;
  for (int j = 0; j < nbeta; ++j) {
    if (j > 0) coef *= c / j;
    if (coef != 0) {
      Rat cc = coef;
      cc.canonicalize();
      out.terms_[ParamExp{j, 0, 0, 0}] = cc;
    }
  }
  return out;
}

bool ParamScalar::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ParamExp{};
}

Rat ParamScalar::constant_part() const {
  auto it = terms_.find(ParamExp{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int ParamScalar::unify(int a, int b) {
  if (a == -1) return b;
  if (b == -1) return a;
  if (a != b)
    throw std::invalid_argument("mixing beta-modes " + std::to_string(a) +
                                " and " + std::to_string(b));
  return a;
}

void ParamScalar::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    bool drop = (it->second == 0);
    if (mode_ >= 1 && it->first.b >= mode_) drop = true;
    it = drop ? terms_.erase(it) : std::next(it);
  }
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
  ParamScalar out;
  out.mode_ = unify(mode_, o.mode_);
  out.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) out.terms_[e] += c;
  out.normalize();
  return out;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
  return *this + (-o);
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
  ParamScalar out;
  out.mode_ = unify(mode_, o.mode_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      if (out.mode_ >= 1 && e1.b + e2.b >= out.mode_) continue;
      ParamExp e{e1.b + e2.b, e1.es + e2.es, e1.eq + e2.eq, e1.eB + e2.eB};
      out.terms_[e] += c1 * c2;
    }
  out.normalize();
  return out;
}

ParamScalar ParamScalar::mul_rat(const Rat& c) const {
  ParamScalar out = *this;
  for (auto& [e, v] : out.terms_) v *= c;
  out.normalize();
  return out;
}

ParamScalar ParamScalar::div_rat(const Rat& c) const {
  if (c == 0) throw std::invalid_argument("division by zero rational");
  return mul_rat(Rat(1) / c);
}

ParamScalar ParamScalar::shift(int b, int es, int eq, int eB) const {
  if (b < 0 || es < 0)
    throw std::invalid_argument("cannot shift beta or s exponent downward");
  ParamScalar out;
  out.mode_ = mode_;
  for (const auto& [e, c] : terms_)
    out.terms_[ParamExp{e.b + b, e.es + es, e.eq + eq, e.eB + eB}] = c;
  out.normalize();
  return out;
}

ParamScalar ParamScalar::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative scalar power");
  ParamScalar out = ParamScalar::one().with_mode(mode_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool ParamScalar::is_invertible_monomial() const {
  if (terms_.size() != 1) return false;
  const ParamExp& e = terms_.begin()->first;
  return e.b == 0 && e.es == 0;
}

ParamScalar ParamScalar::inverse() const {
  if (!is_invertible_monomial())
    throw std::invalid_argument("scalar is not an invertible monomial: " + str());
  const auto& [e, c] = *terms_.begin();
  return monomial(Rat(1) / c, ParamExp{0, 0, -e.eq, -e.eB}, mode_);
}

ParamScalar ParamScalar::derive_s() const {
  ParamScalar out;
  out.mode_ = mode_;
  for (const auto& [e, c] : terms_) {
    if (e.es > 0) {
      ParamExp d{e.b, e.es - 1, e.eq, e.eB};
      out.terms_[d] += c * e.es;
    }
    if (e.eB != 0) {
      // d/ds B^k = k beta B^k
      if (!(mode_ >= 1 && e.b + 1 >= mode_)) {
        ParamExp d{e.b + 1, e.es, e.eq, e.eB};
        out.terms_[d] += c * e.eB;
      }
    }
  }
  out.normalize();
  return out;
}

ParamScalar ParamScalar::div_beta() const {
  ParamScalar out;
  out.mode_ = mode_;
  for (const auto& [e, c] : terms_) {
    if (e.b < 1)
      throw std::invalid_argument("scalar not divisible by beta: " + str());
    out.terms_[ParamExp{e.b - 1, e.es, e.eq, e.eB}] = c;
  }
  // A truncated dividend only determines the quotient below order N-1, but
  // every divisible value this library produces carries an explicit beta
  // factor per term, so the shift is exact; the mode is kept as-is.
  return out;
}

ParamScalar ParamScalar::negate_beta() const {
  ParamScalar out = *this;
  for (auto& [e, c] : out.terms_)
    if (e.b % 2 != 0) c = -c;
  return out;
}

ParamScalar ParamScalar::q_to_b() const {
  ParamScalar out;
  out.mode_ = mode_;
  for (const auto& [e, c] : terms_)
    out.terms_[ParamExp{e.b, e.es, 0, e.eB + e.eq}] += c;
  out.normalize();
  return out;
}

bool ParamScalar::has_q() const {
  for (const auto& [e, c] : terms_)
    if (e.eq != 0) return true;
  return false;
}

int ParamScalar::max_beta_degree() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e.b);
  return m;
}

ParamScalar ParamScalar::with_mode(int mode_code) const {
  ParamScalar out = *this;
  out.mode_ = mode_code;
  out.normalize();
  return out;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    if (e.b) os << "*beta^" << e.b;
    if (e.es) os << "*s^" << e.es;
    if (e.eq) os << "*Q^" << e.eq;
    if (e.eB) os << "*B^" << e.eB;
  }
  return os.str();
}

}  // namespace htoda
