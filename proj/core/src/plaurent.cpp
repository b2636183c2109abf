#include "htoda/plaurent.hpp"

#include <sstream>

namespace htoda {

PLaurent::PLaurent(int trunc_degree, int floor)
    : trunc_(trunc_degree), floor_(floor) {
  if (trunc_degree < 0)
    throw std::invalid_argument("negative truncation degree");
}

PLaurent PLaurent::monomial(int D, int floor, int n, const TSeries& c) {
  PLaurent f(D, floor);
  if (n >= floor && !c.is_zero()) f.coeffs_[n] = c;
  return f;
}

PLaurent PLaurent::p_power(int D, int floor, int n) {
  return monomial(D, floor, n, TSeries::one(D));
}

PLaurent PLaurent::constant(int D, int floor, const ParamScalar& c) {
  return monomial(D, floor, 0, TSeries::constant(D, c));
}

int PLaurent::lo() const {
  return coeffs_.empty() ? floor_ : coeffs_.begin()->first;
}

int PLaurent::hi() const {
  return coeffs_.empty() ? floor_ - 1 : coeffs_.rbegin()->first;
}

TSeries PLaurent::coeff(int n) const {
  if (n < floor_)
    throw std::invalid_argument("p-exponent " + std::to_string(n) +
                                " below the window floor " +
                                std::to_string(floor_));
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? TSeries(trunc_) : it->second;
}

void PLaurent::set_coeff(int n, const TSeries& c) {
  if (n < floor_ || c.is_zero())
    coeffs_.erase(n);
  else
    coeffs_[n] = c;
}

void PLaurent::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second.is_zero() || it->first < floor_) ? coeffs_.erase(it)
                                                      : std::next(it);
}

PLaurent PLaurent::operator+(const PLaurent& o) const {
  if (trunc_ != o.trunc_)
    throw std::invalid_argument("mixing truncation degrees in p-Laurent sum");
  PLaurent out(trunc_, std::max(floor_, o.floor_));
  out.coeffs_ = coeffs_;
  for (const auto& [n, c] : o.coeffs_) {
    auto it = out.coeffs_.find(n);
    if (it == out.coeffs_.end())
      out.coeffs_[n] = c;
    else
      it->second += c;
  }
  out.prune();
  return out;
}

PLaurent PLaurent::operator-(const PLaurent& o) const { return *this + (-o); }

PLaurent PLaurent::operator-() const {
  PLaurent out = *this;
  for (auto& [n, c] : out.coeffs_) c = -c;
  return out;
}

PLaurent PLaurent::operator*(const PLaurent& o) const {
  if (trunc_ != o.trunc_)
    throw std::invalid_argument("mixing truncation degrees in p-Laurent product");
  PLaurent out(trunc_, std::max(floor_, o.floor_));
  for (const auto& [n1, c1] : coeffs_)
    for (const auto& [n2, c2] : o.coeffs_) {
      int n = n1 + n2;
      if (n < out.floor_) continue;
      TSeries prod = c1 * c2;
      if (prod.is_zero()) continue;
      auto it = out.coeffs_.find(n);
      if (it == out.coeffs_.end())
        out.coeffs_[n] = prod;
      else
        it->second += prod;
    }
  out.prune();
  return out;
}

PLaurent PLaurent::mul_scalar(const ParamScalar& c) const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_) {
    TSeries p = v.mul_scalar(c);
    if (!p.is_zero()) out.coeffs_[n] = p;
  }
  return out;
}

PLaurent PLaurent::mul_series(const TSeries& c) const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_) {
    TSeries p = v * c;
    if (!p.is_zero()) out.coeffs_[n] = p;
  }
  return out;
}

PLaurent PLaurent::mul_p_power(int k) const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_)
    if (n + k >= floor_) out.coeffs_[n + k] = v;
  return out;
}

PLaurent PLaurent::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative p-Laurent power");
  PLaurent out = p_power(trunc_, floor_, 0);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

PLaurent PLaurent::derive_p() const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_) {
    if (n == 0) continue;
    if (n - 1 < floor_) continue;
    out.coeffs_[n - 1] = v.mul_rat(n);
  }
  out.prune();
  return out;
}

PLaurent PLaurent::derive_s() const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_) {
    TSeries d = v.derive_s();
    if (!d.is_zero()) out.coeffs_[n] = d;
  }
  return out;
}

PLaurent PLaurent::derive_t(int k) const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_) {
    TSeries d = v.derive_t(k);
    if (!d.is_zero()) out.coeffs_[n] = d;
  }
  return out;
}

PLaurent PLaurent::derive_tb(int k) const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_) {
    TSeries d = v.derive_tb(k);
    if (!d.is_zero()) out.coeffs_[n] = d;
  }
  return out;
}

PLaurent PLaurent::project_nonneg() const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_)
    if (n >= 0) out.coeffs_[n] = v;
  return out;
}

PLaurent PLaurent::project_neg() const {
  PLaurent out(trunc_, floor_);
  for (const auto& [n, v] : coeffs_)
    if (n < 0) out.coeffs_[n] = v;
  return out;
}

bool PLaurent::operator==(const PLaurent& o) const {
  if (trunc_ != o.trunc_)
    throw std::invalid_argument("comparing p-Laurent of different degrees");
  return coeffs_ == o.coeffs_;
}

std::string PLaurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : coeffs_) {
    if (!first) os << "  ++  ";
    first = false;
    os << "p^" << n << " * [" << c.str() << "]";
  }
  return os.str();
}

namespace {
// Nilpotent means every term either has positive weighted degree or carries
// beta under a truncated mode; powers of such an element vanish eventually.
bool laurent_nilpotent(const PLaurent& f) {
  for (const auto& [n, c] : f.coeffs())
    for (const auto& [m, v] : c.terms()) {
      if (m.wdeg() >= 1) continue;
      if (v.mode_code() < 1) return false;
      for (const auto& [e, r] : v.terms())
        if (e.b < 1) return false;
    }
  return true;
}

int nilpotency_cap(const PLaurent& f) {
  int cap = f.trunc_degree() + 2;
  for (const auto& [n, c] : f.coeffs())
    for (const auto& [m, v] : c.terms())
      if (v.mode_code() >= 1) return cap + v.mode_code();
  return cap;
}
}  // namespace

PLaurent exp_laurent(const PLaurent& f) {
  if (!laurent_nilpotent(f))
    throw std::invalid_argument("exp_laurent needs a nilpotent argument");
  int cap = nilpotency_cap(f);
  PLaurent sum = PLaurent::p_power(f.trunc_degree(), f.floor(), 0);
  PLaurent pw = sum;
  for (int n = 1; n <= cap && !pw.is_zero(); ++n) {
    pw = (pw * f).mul_scalar(ParamScalar(Rat(1, n)));
    sum += pw;
  }
  return sum;
}

LaurentUnit decompose_unit(const PLaurent& f) {
  // Locate the unique exponent whose coefficient contains an invertible
  // parameter monomial at the trivial t-monomial.
  int lead_exp = 0;
  ParamScalar lead;
  bool found = false;
  for (const auto& [n, c] : f.coeffs()) {
    ParamScalar unit_part;
    for (const auto& [m, v] : c.terms()) {
      if (m.wdeg() != 0) continue;
      for (const auto& [e, r] : v.terms())
        if (e.b == 0 && e.es == 0)
          unit_part += ParamScalar::monomial(r, e, v.mode_code());
    }
    if (unit_part.is_zero()) continue;
    if (found || !unit_part.is_invertible_monomial())
      throw std::invalid_argument(
          "p-Laurent series has no single invertible leading monomial");
    found = true;
    lead_exp = n;
    lead = unit_part;
  }
  if (!found)
    throw std::invalid_argument("p-Laurent series has no invertible lead");

  PLaurent x =
      f.mul_scalar(lead.inverse()).mul_p_power(-lead_exp) -
      PLaurent::p_power(f.trunc_degree(), f.floor(), 0);
  if (!laurent_nilpotent(x))
    throw std::invalid_argument("p-Laurent remainder is not nilpotent");

  int cap = nilpotency_cap(x);
  LaurentUnit u;
  u.lead = lead;
  u.lead_exp = lead_exp;

  PLaurent log_sum(f.trunc_degree(), f.floor());
  PLaurent inv_sum = PLaurent::p_power(f.trunc_degree(), f.floor(), 0);
  PLaurent pw = PLaurent::p_power(f.trunc_degree(), f.floor(), 0);
  for (int n = 1; n <= cap && !(pw = pw * x).is_zero(); ++n) {
    PLaurent term = pw.mul_scalar(ParamScalar(Rat(1, n)));
    log_sum += (n % 2 == 0) ? -term : term;
    inv_sum += (n % 2 == 0) ? pw : -pw;
  }
  u.log_series = log_sum;
  u.inverse = inv_sum.mul_scalar(lead.inverse()).mul_p_power(-lead_exp);
  return u;
}

PLaurent poisson(const PLaurent& F, const PLaurent& G) {
  // p (F_p G_s - F_s G_p) termwise: the pair (p^n1, p^n2) contributes at
  // p^{n1+n2}, so no intermediate shift can fall out of the window.
  if (F.trunc_degree() != G.trunc_degree())
    throw std::invalid_argument("mixing truncation degrees in poisson bracket");
  PLaurent out(F.trunc_degree(), std::max(F.floor(), G.floor()));
  for (const auto& [n1, c1] : F.coeffs())
    for (const auto& [n2, c2] : G.coeffs()) {
      int n = n1 + n2;
      if (n < out.floor()) continue;
      TSeries term = c1.mul_rat(n1) * c2.derive_s() -
                     c1.derive_s() * c2.mul_rat(n2);
      if (term.is_zero()) continue;
      out.set_coeff(n, out.coeff(n) + term);
    }
  return out;
}

}  // namespace htoda
