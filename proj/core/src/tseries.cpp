#include "htoda/tseries.hpp"

#include <algorithm>
#include <sstream>

namespace htoda {

int Monomial::wdeg() const {
  int d = 0;
  for (auto [k, e] : t) d += k * e;
  for (auto [k, e] : tb) d += k * e;
  return d;
}

int Monomial::var_count() const {
  int n = 0;
  for (auto [k, e] : t) n += e;
  for (auto [k, e] : tb) n += e;
  return n;
}

namespace {
int exp_in(const std::vector<std::pair<int, int>>& v, int k) {
  for (auto [kk, e] : v)
    if (kk == k) return e;
  return 0;
}

std::vector<std::pair<int, int>> merge_exps(
    const std::vector<std::pair<int, int>>& a,
    const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

// Lexicographic on dense exponent vectors; larger exponent earlier wins.
int lex_cmp(const std::vector<std::pair<int, int>>& a,
            const std::vector<std::pair<int, int>>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first)
      // the one with the smaller variable index has a nonzero exponent there
      return a[i].first < b[j].first ? -1 : 1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return -1;
  if (j < b.size()) return 1;
  return 0;
}
}  // namespace

int Monomial::exp_t(int k) const { return exp_in(t, k); }
int Monomial::exp_tb(int k) const { return exp_in(tb, k); }

Monomial Monomial::mul(const Monomial& o) const {
  return Monomial{merge_exps(t, o.t), merge_exps(tb, o.tb)};
}

std::string Monomial::str() const {
  if (t.empty() && tb.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, const std::vector<std::pair<int, int>>& v) {
    for (auto [k, e] : v) {
      if (!first) os << "*";
      first = false;
      os << name << k;
      if (e > 1) os << "^" << e;
    }
  };
  emit("t", t);
  emit("tbar", tb);
  return os.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.wdeg(), db = b.wdeg();
  if (da != db) return da < db;
  int c = lex_cmp(a.t, b.t);
  if (c != 0) return c < 0;
  return lex_cmp(a.tb, b.tb) < 0;
}

TSeries::TSeries(int trunc_degree) : trunc_(trunc_degree) {
  if (trunc_degree < 0)
    throw std::invalid_argument("negative truncation degree");
}

TSeries TSeries::constant(int D, const ParamScalar& c) {
  TSeries f(D);
  if (!c.is_zero()) f.terms_[Monomial{}] = c;
  return f;
}

TSeries TSeries::var_t(int D, int k, const ParamScalar& coeff) {
  if (k < 1) throw std::invalid_argument("variable index must be >= 1");
  TSeries f(D);
  if (k <= D && !coeff.is_zero()) f.terms_[Monomial{{{k, 1}}, {}}] = coeff;
  return f;
}

TSeries TSeries::var_tb(int D, int k, const ParamScalar& coeff) {
  if (k < 1) throw std::invalid_argument("variable index must be >= 1");
  TSeries f(D);
  if (k <= D && !coeff.is_zero()) f.terms_[Monomial{{}, {{k, 1}}}] = coeff;
  return f;
}

void TSeries::check_compatible(const TSeries& o) const {
  if (trunc_ != o.trunc_)
    throw std::invalid_argument("mixing truncation degrees " +
                                std::to_string(trunc_) + " and " +
                                std::to_string(o.trunc_));
}

ParamScalar TSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar::zero() : it->second;
}

void TSeries::set_coeff(const Monomial& m, const ParamScalar& c) {
  if (m.wdeg() > trunc_ || c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

TSeries TSeries::operator+(const TSeries& o) const {
  check_compatible(o);
  TSeries out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + (-o); }

TSeries TSeries::operator-() const {
  TSeries out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TSeries TSeries::operator*(const TSeries& o) const {
  check_compatible(o);
  TSeries out(trunc_);
  for (const auto& [m1, c1] : terms_) {
    int d1 = m1.wdeg();
    for (const auto& [m2, c2] : o.terms_) {
      if (d1 + m2.wdeg() > trunc_) continue;
      Monomial m = m1.mul(m2);
      auto it = out.terms_.find(m);
      if (it == out.terms_.end())
        out.terms_[m] = c1 * c2;
      else
        it->second += c1 * c2;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second.is_zero() ? out.terms_.erase(it) : std::next(it);
  return out;
}

TSeries TSeries::mul_scalar(const ParamScalar& c) const {
  TSeries out(trunc_);
  for (const auto& [m, v] : terms_) {
    ParamScalar p = v * c;
    if (!p.is_zero()) out.terms_[m] = p;
  }
  return out;
}

TSeries TSeries::mul_rat(const Rat& c) const {
  if (c == 0) return TSeries(trunc_);
  TSeries out = *this;
  for (auto& [m, v] : out.terms_) v = v.mul_rat(c);
  return out;
}

namespace {
// Removes one power of variable k from v; returns the old exponent (0 if absent).
int lower_exp(std::vector<std::pair<int, int>>& v, int k) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it->first == k) {
      int e = it->second;
      if (--it->second == 0) v.erase(it);
      return e;
    }
  }
  return 0;
}
}  // namespace

TSeries TSeries::derive_t(int k) const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    int e = lower_exp(d.t, k);
    if (e == 0) continue;
    ParamScalar nc = c.mul_rat(e);
    auto it = out.terms_.find(d);
    if (it == out.terms_.end())
      out.terms_[d] = nc;
    else
      it->second += nc;
  }
  return out;
}

TSeries TSeries::derive_tb(int k) const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    int e = lower_exp(d.tb, k);
    if (e == 0) continue;
    out.terms_[d] += c.mul_rat(e);
    if (out.terms_[d].is_zero()) out.terms_.erase(d);
  }
  return out;
}

TSeries TSeries::derive_s() const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    ParamScalar d = c.derive_s();
    if (!d.is_zero()) out.terms_[m] = d;
  }
  return out;
}

TSeries TSeries::div_beta() const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) out.terms_[m] = c.div_beta();
  return out;
}

TSeries TSeries::negate_beta() const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) out.terms_[m] = c.negate_beta();
  return out;
}

TSeries TSeries::q_to_b() const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    ParamScalar v = c.q_to_b();
    if (!v.is_zero()) out.terms_[m] = v;
  }
  return out;
}

TSeries TSeries::drop_beta_at_or_above(int k) const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    ParamScalar kept;
    for (const auto& [e, v] : c.terms())
      if (e.b < k) kept += ParamScalar::monomial(v, e, c.mode_code());
    if (!kept.is_zero()) out.terms_[m] = kept;
  }
  return out;
}

TSeries TSeries::swap_vars() const {
  TSeries out(trunc_);
  for (const auto& [m, c] : terms_) out.terms_[Monomial{m.tb, m.t}] = c;
  return out;
}

bool TSeries::has_q() const {
  for (const auto& [m, c] : terms_)
    if (c.has_q()) return true;
  return false;
}

bool TSeries::operator==(const TSeries& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

std::string TSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << c.str() << ")*" << m.str();
  }
  return os.str();
}

namespace {
// Nilpotency of the constant term: zero, or purely beta-positive under a
// truncated beta-mode (so that high beta powers die by truncation).
bool nilpotent_constant(const ParamScalar& c) {
  if (c.is_zero()) return true;
  if (c.mode_code() < 1) return false;
  for (const auto& [e, v] : c.terms())
    if (e.b < 1) return false;
  return true;
}
}  // namespace

TSeries exp_series(const TSeries& f) {
  if (!nilpotent_constant(f.constant_term()))
    throw std::invalid_argument(
        "exp_series needs a nilpotent argument (zero or beta-positive "
        "truncated constant term)");
  int cap = f.trunc_degree() + 2;
  int mode = f.constant_term().mode_code();
  if (mode >= 1) cap += mode;
  TSeries sum = TSeries::one(f.trunc_degree());
  TSeries pow = TSeries::one(f.trunc_degree());
  for (int n = 1; n <= cap && !pow.is_zero(); ++n) {
    pow = (pow * f).div_rat(n);
    sum += pow;
  }
  return sum;
}

LogUnit log_unit(const TSeries& f) {
  ParamScalar c0 = f.constant_term();
  ParamScalar lead;
  // Allow a constant term of the form (invertible monomial) + beta-positive
  // rest in truncated mode; the unit is taken to be the monomial.
  if (c0.is_invertible_monomial()) {
    lead = c0;
  } else {
    ParamScalar main, rest;
    for (const auto& [e, v] : c0.terms()) {
      if (e.b == 0)
        main += ParamScalar::monomial(v, e, c0.mode_code());
      else
        rest += ParamScalar::monomial(v, e, c0.mode_code());
    }
    if (!main.is_invertible_monomial() || c0.mode_code() < 1)
      throw std::invalid_argument("log_unit: leading coefficient not invertible: " +
                                  c0.str());
    lead = main;
  }
  TSeries x = f.mul_scalar(lead.inverse()) - TSeries::one(f.trunc_degree());
  if (!nilpotent_constant(x.constant_term()))
    throw std::invalid_argument("log_unit: non-nilpotent remainder");
  int cap = f.trunc_degree() + 2;
  if (x.constant_term().mode_code() >= 1) cap += x.constant_term().mode_code();
  TSeries sum(f.trunc_degree());
  TSeries pow = TSeries::one(f.trunc_degree());
  for (int n = 1; n <= cap && !pow.is_zero(); ++n) {
    pow = pow * x;
    TSeries term = pow.div_rat(n);
    if (n % 2 == 0) term = -term;
    sum += term;
  }
  return LogUnit{lead, sum};
}

TSeries substitute(const TSeries& f, const std::map<int, AffineSub>& t_sub,
                   const std::map<int, AffineSub>& tb_sub) {
  TSeries out(f.trunc_degree());
  int D = f.trunc_degree();
  for (const auto& [m, c] : f.terms()) {
    TSeries acc = TSeries::constant(D, c);
    auto apply = [&](const std::vector<std::pair<int, int>>& exps,
                     const std::map<int, AffineSub>& sub, bool barred) {
      for (auto [k, e] : exps) {
        auto it = sub.find(k);
        TSeries base(D);
        if (it == sub.end()) {
          base = barred ? TSeries::var_tb(D, k) : TSeries::var_t(D, k);
        } else {
          base = TSeries::constant(D, it->second.a);
          base += barred ? TSeries::var_tb(D, k, it->second.b)
                         : TSeries::var_t(D, k, it->second.b);
        }
        for (int i = 0; i < e; ++i) acc *= base;
      }
    };
    apply(m.t, t_sub, false);
    apply(m.tb, tb_sub, true);
    out += acc;
  }
  return out;
}

}  // namespace htoda
