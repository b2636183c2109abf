#include "htoda/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace htoda {
namespace {

// First-column hook lengths ("beta numbers"): strictly decreasing
// b_i = lambda_i + len - i. Border strips of size r correspond to entries
// with b_i - r >= 0 not already present; the strip height parity is the
// number of entries passed over.
std::vector<int> beta_numbers(const Partition& lambda) {
  std::vector<int> b;
  int len = lambda.length();
  for (int i = 1; i <= len; ++i) b.push_back(lambda.part(i) + len - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  std::vector<int> parts;
  int len = static_cast<int>(b.size());
  for (int i = 0; i < len; ++i) {
    int p = b[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

using Key = std::pair<Partition, Partition>;
std::map<Key, Int> g_memo;
std::mutex g_memo_mutex;

Int mn_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find({lambda, mu});
    if (it != g_memo.end()) return it->second;
  }
  int r = mu.part(1);
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  Partition mu_rest(std::move(rest));

  std::vector<int> b = beta_numbers(lambda);
  Int total = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    int target = b[i] - r;
    if (target < 0) continue;
    if (std::find(b.begin(), b.end(), target) != b.end()) continue;
    int crossings = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++crossings;
    std::vector<int> b2 = b;
    b2[i] = target;
    Int sub = mn_rec(from_beta(std::move(b2)), mu_rest);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo.insert({{lambda, mu}, total});
  return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character: |lambda| != |mu|");
  return mn_rec(lambda, mu);
}

Rat f_class(const Partition& lambda, const Partition& mu) {
  Rat f(character(lambda, mu) * class_data(mu).class_size, dim_irrep(lambda));
  f.canonicalize();
  return f;
}

}  // namespace htoda
