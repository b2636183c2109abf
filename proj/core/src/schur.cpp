#include "htoda/schur.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace htoda {

namespace {

// h_0..h_m in one sweep; h_0 = 1, m h_m = sum_{k=1}^m k t_k h_{m-k}.
std::vector<TSeries> homog_ladder(int m, int D, bool barred) {
  std::vector<TSeries> h;
  h.reserve(m + 1);
  h.push_back(TSeries::one(D));
  for (int n = 1; n <= m; ++n) {
    TSeries acc = TSeries::zero(D);
    for (int k = 1; k <= n && k <= D; ++k) {
      TSeries var = barred ? TSeries::var_tb(D, k) : TSeries::var_t(D, k);
      acc = acc + (var * h[n - k]).mul_rat(k);
    }
    h.push_back(acc.div_rat(n));
  }
  return h;
}

// Determinant of the Jacobi-Trudi matrix by cofactor expansion along rows,
// memoized on the set of still-unused columns (rows are consumed in order,
// so the row index is determined by the popcount).
class JacobiTrudiDet {
 public:
  JacobiTrudiDet(const Partition& lambda, const std::vector<TSeries>& h, int D)
      : lambda_(lambda), h_(h), D_(D), n_(static_cast<int>(lambda.length())) {}

  TSeries run() {
    if (n_ == 0) return TSeries::one(D_);
    return det((std::uint32_t(1) << n_) - 1);
  }

 private:
  const TSeries& entry(int i, int j) const {
    // 0-based i, j; index lambda_i - i + j in 1-based terms.
    long idx = lambda_.part(i + 1) - (i + 1) + (j + 1);
    if (idx < 0) return zero_;
    return h_[static_cast<std::size_t>(idx)];
  }

  TSeries det(std::uint32_t cols) {
    if (cols == 0) return TSeries::one(D_);
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    int row = n_ - __builtin_popcount(cols);
    TSeries acc = TSeries::zero(D_);
    int sign = 1;
    for (int j = 0; j < n_; ++j) {
      std::uint32_t bit = std::uint32_t(1) << j;
      if (!(cols & bit)) continue;
      const TSeries& e = entry(row, j);
      if (!e.is_zero()) {
        TSeries sub = det(cols & ~bit);
        TSeries contrib = e * sub;
        acc = (sign > 0) ? acc + contrib : acc - contrib;
      }
      sign = -sign;
    }
    memo_.emplace(cols, acc);
    return acc;
  }

  const Partition& lambda_;
  const std::vector<TSeries>& h_;
  int D_;
  int n_;
  TSeries zero_{TSeries::zero(0)};
  std::unordered_map<std::uint32_t, TSeries> memo_;
};

}  // namespace

TSeries complete_homog(int m, int D, bool barred) {
  if (m < 0) return TSeries::zero(D);
  return homog_ladder(m, D, barred).back();
}

TSeries schur(const Partition& lambda, int D, bool barred) {
  if (lambda.length() > 32)
    throw std::invalid_argument("schur: partition length beyond support");
  int top = static_cast<int>(lambda.part(1) + lambda.length());
  std::vector<TSeries> h = homog_ladder(top, D, barred);
  JacobiTrudiDet det(lambda, h, D);
  return det.run();
}

Rat schur_principal(const Partition& lambda) {
  if (lambda.empty()) return 1;
  return Rat(dim_irrep(lambda)) / Rat(factorial(lambda.size()));
}

TSeries schur_neg(const Partition& lambda, int D, bool barred) {
  TSeries s = schur(lambda, D, barred);
  TSeries out = TSeries::zero(D);
  for (const auto& [mono, c] : s.terms()) {
    ParamScalar v = (mono.var_count() % 2 == 0) ? c : c.mul_rat(-1);
    out.set_coeff(mono, v);
  }
  return out;
}

}  // namespace htoda
