#include "htoda/hurwitz.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>

#include "htoda/characters.hpp"
#include "htoda/parallel.hpp"
#include "htoda/schur.hpp"

namespace htoda {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

int cycle_count(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j]))
      seen[j] = 1;
  }
  return cycles;
}

Partition cycle_type(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(lens);
}

std::map<Partition, std::vector<Perm>> classes_by_type(int d) {
  std::map<Partition, std::vector<Perm>> out;
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do {
    out[cycle_type(p)].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void validate_profiles(int d, const std::vector<Partition>& profiles) {
  for (const auto& mu : profiles)
    if (mu.size() != d)
      throw std::invalid_argument("ramification profile size differs from d");
}

// Tuples (sigma_1, ..., sigma_{r-1}) from the first r-1 classes whose
// product lies in the last class; the final factor is then forced.  The
// prune uses the Cayley norm |sigma| = d - cycles(sigma): the identity is
// unreachable when the partial norm exceeds what the remaining factors can
// cancel.
long scan_tuples(const std::vector<const std::vector<Perm>*>& classes,
                 const Partition& last, const std::vector<int>& norm_budget,
                 std::size_t level, const Perm& partial) {
  int d = static_cast<int>(partial.size());
  if (level == classes.size())
    return cycle_type(partial) == last ? 1 : 0;
  long count = 0;
  for (const Perm& sigma : *classes[level]) {
    Perm next = compose(partial, sigma);
    if (d - cycle_count(next) > norm_budget[level + 1]) continue;
    count += scan_tuples(classes, last, norm_budget, level + 1, next);
  }
  return count;
}

}  // namespace

Rat hurwitz_burnside(int d, const std::vector<Partition>& profiles) {
  if (d < 0) throw std::invalid_argument("negative degree");
  validate_profiles(d, profiles);
  Rat total = 0;
  Rat dfact(factorial(d));
  for (const Partition& lambda : partitions_of(d)) {
    Rat weight = Rat(dim_irrep(lambda)) / dfact;
    Rat term = weight * weight;
    for (const Partition& mu : profiles) {
      if (term == 0) break;
      term *= f_class(lambda, mu);
    }
    total += term;
  }
  return total;
}

Rat hurwitz_bruteforce(int d, const std::vector<Partition>& profiles,
                       const BruteBounds& bounds) {
  if (d < 0) throw std::invalid_argument("negative degree");
  validate_profiles(d, profiles);
  if (d > bounds.max_degree)
    throw resource_error("enumeration degree beyond configured bound");
  if (static_cast<int>(profiles.size()) > bounds.max_profiles)
    throw resource_error("enumeration profile count beyond configured bound");

  Rat dfact(factorial(d));
  if (profiles.empty()) return 1 / dfact;

  auto classes = classes_by_type(d);
  std::size_t r = profiles.size();
  std::vector<const std::vector<Perm>*> scan;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    auto it = classes.find(profiles[i]);
    if (it == classes.end()) return 0;
    scan.push_back(&it->second);
  }
  // norm_budget[i] = attainable norm of the product of factors i..r-1.
  std::vector<int> norm_budget(r + 1, 0);
  for (std::size_t i = r; i-- > 0;)
    norm_budget[i] =
        norm_budget[i + 1] + static_cast<int>(d - profiles[i].length());

  Perm id(static_cast<std::size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  if (scan.empty())
    return Rat(cycle_type(id) == profiles.back() ? 1 : 0) / dfact;

  const std::vector<Perm>& first = *scan[0];
  std::atomic<long> count{0};
  parallel_chunks(first.size(), [&](std::size_t lo, std::size_t hi) {
    long local = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      Perm partial = compose(id, first[i]);
      if (d - cycle_count(partial) <= norm_budget[1])
        local += scan_tuples(scan, profiles.back(), norm_budget, 1, partial);
    }
    count += local;
  });
  return Rat(count.load()) / dfact;
}

Rat simple_hurwitz(int d, int r, const Partition& mu) {
  if (d < 0 || r < 0) throw std::invalid_argument("negative parameter");
  validate_profiles(d, {mu});
  Rat total = 0;
  Rat dfact(factorial(d));
  for (const Partition& lambda : partitions_of(d)) {
    Rat weight = Rat(dim_irrep(lambda)) / dfact;
    Rat transposition_eigen = rat(kappa(lambda), 2);
    Rat term = weight * weight * f_class(lambda, mu);
    for (int i = 0; i < r; ++i) term *= transposition_eigen;
    total += term;
  }
  return total;
}

Monomial cycle_monomial(const Partition& mu, bool barred) {
  Monomial mono;
  auto& side = barred ? mono.tb : mono.t;
  for (const auto& [part, mult] : mu.mult())
    side.emplace_back(static_cast<int>(part), mult);
  std::sort(side.begin(), side.end());
  return mono;
}

Int cycle_factor(const Partition& mu) {
  Int f = 1;
  for (long part : mu.parts()) f *= part;
  return f;
}

TSeries power_sum(const Partition& mu, int D, bool barred) {
  if (mu.size() > D) return TSeries::zero(D);
  TSeries out = TSeries::zero(D);
  out.set_coeff(cycle_monomial(mu, barred),
                ParamScalar::monomial(Rat(cycle_factor(mu)), ParamExp{}));
  return out;
}

TSeries frobenius_schur(const Partition& lambda, int D, bool barred) {
  TSeries out = TSeries::zero(D);
  for (const Partition& mu : partitions_of(lambda.size())) {
    Int chi = character(lambda, mu);
    if (chi == 0) continue;
    Rat coeff = Rat(chi) / Rat(class_data(mu).z);
    out = out + power_sum(mu, D, barred).mul_rat(coeff);
  }
  return out;
}

TSeries z_simple(int D, int nbeta) {
  TSeries out = TSeries::zero(D);
  for (int d = 0; d <= D; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      ParamScalar amp = ParamScalar::exp_beta(rat(kappa(lambda), 2), nbeta)
                            .shift(0, 0, static_cast<int>(d), 0)
                            .mul_rat(schur_principal(lambda));
      out = out + schur(lambda, D).mul_scalar(amp);
    }
  }
  return out;
}

TSeries z_double(int D, int nbeta) {
  TSeries out = TSeries::zero(D);
  for (int d = 0; 2 * d <= D; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      ParamScalar amp = ParamScalar::exp_beta(rat(kappa(lambda), 2), nbeta)
                            .shift(0, 0, static_cast<int>(d), 0);
      TSeries pair = schur(lambda, D) * schur_neg(lambda, D, true);
      out = out + pair.mul_scalar(amp);
    }
  }
  return out;
}

TSeries cut_and_join(const TSeries& f) {
  int D = f.trunc_degree();
  TSeries out = TSeries::zero(D);
  for (int k = 1; k < D; ++k) {
    for (int l = 1; k + l <= D; ++l) {
      TSeries vars = TSeries::var_t(D, k) * TSeries::var_t(D, l);
      TSeries first = vars * f.derive_t(k + l);
      TSeries second = TSeries::var_t(D, k + l) * f.derive_t(k).derive_t(l);
      out = out + first.mul_rat(rat(long(k) * l, 2)) +
            second.mul_rat(rat(k + l, 2));
    }
  }
  return out;
}

TSeries exp_cut_and_join(const TSeries& f, int nbeta) {
  ParamScalar beta =
      ParamScalar::monomial(1, ParamExp{1, 0, 0, 0}, nbeta);
  TSeries acc = f;
  TSeries term = f;
  for (int n = 1; n < nbeta; ++n) {
    term = cut_and_join(term).mul_scalar(beta).div_rat(n);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return acc;
}

TSeries exp_qt1(int D, int nbeta) {
  ParamScalar q = ParamScalar::monomial(1, ParamExp{0, 0, 1, 0}, nbeta);
  return exp_series(TSeries::var_t(D, 1).mul_scalar(q));
}

TSeries exp_diag_pairing(int D, int nbeta) {
  TSeries arg = TSeries::zero(D);
  for (int k = 1; 2 * k <= D; ++k) {
    ParamScalar amp =
        ParamScalar::monomial(Rat(-k), ParamExp{0, 0, k, 0}, nbeta);
    arg = arg + (TSeries::var_t(D, k) * TSeries::var_tb(D, k)).mul_scalar(amp);
  }
  return exp_series(arg);
}

Rat genfun_hurwitz_coeff(const TSeries& z, int r, int d, const Partition& mu) {
  ParamScalar c = z.coeff(cycle_monomial(mu, false));
  ParamExp want{r, 0, static_cast<int>(d), 0};
  for (const auto& [e, v] : c.terms())
    if (e == want) return v * Rat(factorial(r)) / Rat(cycle_factor(mu));
  return 0;
}

}  // namespace htoda
